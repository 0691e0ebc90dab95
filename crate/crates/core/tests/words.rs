mod common;

use common::{partial_sum, q, random_unit, rng};
use itertools::Itertools;
use num_traits::Signed;
use proptest::prelude::*;
use radixforge::rational::inv_pow;
use radixforge::word::{canonicalize, evaluate};
use radixforge::{expand, DigitWord, Rational};
use std::collections::HashMap;

fn words(base: u32, pre_len: usize, per_len: usize) -> impl Iterator<Item = DigitWord> {
    let digits = (0..pre_len + per_len)
        .map(move |_| 0..base)
        .multi_cartesian_product();
    let digits: Vec<Vec<u32>> = if pre_len + per_len == 0 {
        vec![vec![]]
    } else {
        digits.collect()
    };
    digits
        .into_iter()
        .map(move |d| DigitWord::new(base, d[..pre_len].to_vec(), d[pre_len..].to_vec()).unwrap())
}

#[test]
fn canonical_words_have_distinct_values() {
    let mut seen: HashMap<Rational, DigitWord> = HashMap::new();
    for pre in 0..=4 {
        for per in 1..=3 {
            for w in words(2, pre, per).filter(DigitWord::is_canonical) {
                if let Some(other) = seen.insert(w.value(), w.clone()) {
                    assert_eq!(other, w, "two canonical words share a value");
                }
            }
        }
    }
    assert!(seen.len() > 100);
}

#[test]
fn every_word_canonicalizes_to_the_expansion() {
    for pre in 0..=3 {
        for per in 1..=3 {
            for w in words(3, pre, per) {
                let c = canonicalize(&w);
                assert_eq!(c.value(), w.value());
                assert_eq!(c, expand(&w.value(), 3).unwrap(), "word {w}");
            }
        }
    }
}

#[test]
fn closed_form_matches_partial_sums() {
    let mut r = rng(7);
    for _ in 0..200 {
        let base = [2u32, 3, 5, 7, 10, 16][rand::Rng::gen_range(&mut r, 0..6)];
        let w = common::random_word(&mut r, base, 5, 4);
        let approx = partial_sum(|n| w.digit(n + 1) as i64, base as i64, 64);
        let gap = w.value() - approx;
        assert!(!gap.is_negative() && gap <= inv_pow(base, 64), "word {w}");
    }
}

#[test]
fn pinned_values() {
    let w = |t: &str| t.parse::<DigitWord>().unwrap();
    assert_eq!(expand(&q(1, 3), 3).unwrap(), w("3:1(0)"));
    assert_eq!(expand(&q(1, 3), 2).unwrap(), w("2:(01)"));
    assert_eq!(expand(&q(2, 27), 3).unwrap(), w("3:002(0)"));
    assert_eq!(evaluate(&w("3:001(2)"), 3).unwrap(), q(2, 27));
    assert_eq!(evaluate(&w("3:002(2)"), 3).unwrap(), q(1, 9));
    assert_eq!(evaluate(&w("2:(10)"), 2).unwrap(), q(2, 3));
    assert_eq!(expand(&q(1, 1), 5).unwrap(), w("5:(4)"));
    assert_eq!(w("2:0(11)").canonical(), w("2:1(0)"));
}

proptest! {
    #[test]
    fn expand_then_evaluate(n in 0i64..5000, d in 1i64..5000, base in 2u32..12) {
        let x = q(n.min(d), d);
        let w = expand(&x, base).unwrap();
        prop_assert!(w.is_canonical());
        prop_assert_eq!(evaluate(&w, base).unwrap(), x);
    }

    #[test]
    fn dual_forms_share_value(seed in any::<u64>(), base in 2u32..8) {
        let x = random_unit(&mut rng(seed), 10_000);
        let forms = expand(&x, base).unwrap().expansions();
        prop_assert!(!forms.is_empty() && forms.len() <= 2);
        for f in &forms {
            prop_assert_eq!(f.value(), x.clone());
        }
        if let [c, d] = forms.as_slice() {
            prop_assert!(c.is_terminating() && d.has_top_tail());
        }
    }
}
