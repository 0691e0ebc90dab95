//! Lexicographic ranking of permutations through the factorial number system.
//!
//! Index 0 is the identity and index `n! - 1` the reversal.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Fenwick tree over `0..n` counting still-available elements.
struct Available {
    tree: Vec<usize>,
}

impl Available {
    fn full(n: usize) -> Self {
        let mut tree = vec![0; n + 1];
        for i in 1..=n {
            tree[i] += 1;
            let j = i + (i & i.wrapping_neg());
            if j <= n {
                tree[j] += tree[i];
            }
        }
        Self { tree }
    }

    fn remove(&mut self, elem: usize) {
        let mut i = elem + 1;
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Number of available elements strictly below `elem`.
    fn count_below(&self, elem: usize) -> usize {
        let mut i = elem;
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }

    /// The `k`-th smallest available element (zero-based).
    fn select(&self, mut k: usize) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= k {
                k -= self.tree[next];
                pos = next;
            }
            step >>= 1;
        }
        pos
    }
}

/// Lehmer code of a permutation of `0..n`.
pub fn lehmer_code(perm: &[usize]) -> Vec<usize> {
    let mut avail = Available::full(perm.len());
    perm.iter()
        .map(|&p| {
            let c = avail.count_below(p);
            avail.remove(p);
            c
        })
        .collect()
}

/// Lexicographic rank of a permutation of `0..n`.
pub fn rank(perm: &[usize]) -> BigUint {
    let n = perm.len();
    lehmer_code(perm)
        .into_iter()
        .enumerate()
        .fold(BigUint::zero(), |acc, (i, c)| acc * (n - i) + c)
}

/// Permutation of `0..n` with lexicographic rank `index`, or `None` when
/// `index >= n!`.
pub fn unrank(n: usize, index: &BigUint) -> Option<Vec<usize>> {
    // factorial-base digits, least significant first
    let mut code = vec![0usize; n];
    let mut rest = index.clone();
    for radix in 1..=n {
        let (q, r) = rest.div_rem(&BigUint::from(radix));
        code[n - radix] = r.to_usize().expect("remainder below radix");
        rest = q;
    }
    if !rest.is_zero() {
        return None;
    }
    let mut avail = Available::full(n);
    Some(
        code.into_iter()
            .map(|c| {
                let e = avail.select(c);
                avail.remove(e);
                e
            })
            .collect(),
    )
}
