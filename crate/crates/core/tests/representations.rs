mod common;

use common::{partial_sum, q, random_schedule, random_unit, random_word, rng};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;
use radixforge::rational::inv_pow;
use radixforge::repr::{
    cantor_value, classify_point, flip_odd, flip_on, nega_value, preimages, quasi_bounds,
    quasi_nega_value,
};
use radixforge::{expand, inverse_transform, pseudo_value, transform, Periodic, SignPattern};

fn random_pattern(r: &mut impl rand::Rng) -> SignPattern {
    let pre = (0..r.gen_range(0..=3)).map(|_| r.gen_bool(0.5)).collect();
    let per = (0..r.gen_range(1..=3)).map(|_| r.gen_bool(0.5)).collect();
    SignPattern::new(pre, per).unwrap()
}

#[test]
fn nega_matches_alternating_partial_sums() {
    let mut r = rng(11);
    for _ in 0..300 {
        let base = if rand::Rng::gen_bool(&mut r, 0.5) {
            2
        } else {
            3
        };
        let w = random_word(&mut r, base, 3, 6);
        let s = base as i64;
        let approx = partial_sum(
            |n| {
                if n % 2 == 0 {
                    -(w.digit(n + 1) as i64)
                } else {
                    w.digit(n + 1) as i64
                }
            },
            s,
            64,
        );
        let v = nega_value(&w, base).unwrap();
        assert!((v.clone() - approx).abs() <= inv_pow(base, 63), "word {w}");
        assert_eq!(v + q(s, s + 1), flip_odd(&w).value());
    }
}

#[test]
fn quasi_nega_matches_signed_partial_sums() {
    let mut r = rng(12);
    for _ in 0..300 {
        let base = if rand::Rng::gen_bool(&mut r, 0.5) {
            2
        } else {
            3
        };
        let nb = random_pattern(&mut r);
        let w = random_word(&mut r, base, 3, 6);
        let approx = partial_sum(
            |n| {
                let d = w.digit(n + 1) as i64;
                if nb.contains(n + 1) {
                    -d
                } else {
                    d
                }
            },
            base as i64,
            64,
        );
        let v = quasi_nega_value(&w, base, &nb).unwrap();
        assert!((v.clone() - approx).abs() <= inv_pow(base, 63));
        let (lo, hi) = quasi_bounds(base, &nb).unwrap();
        assert!(lo <= v && v <= hi);
        assert_eq!(v - lo, flip_on(&w, &nb).value());
        let bases = Periodic::constant(base);
        assert_eq!(
            cantor_value(w.digits(), &bases, Some(&nb)).unwrap(),
            quasi_nega_value(&w, base, &nb).unwrap()
        );
    }
}

#[test]
fn cantor_matches_partial_products() {
    let mut r = rng(13);
    for _ in 0..200 {
        let bases = Periodic::new(
            (0..rand::Rng::gen_range(&mut r, 0..3))
                .map(|_| rand::Rng::gen_range(&mut r, 2..6))
                .collect(),
            (0..rand::Rng::gen_range(&mut r, 1..4))
                .map(|_| rand::Rng::gen_range(&mut r, 2..6))
                .collect(),
        )
        .unwrap();
        let digits = Periodic::new(
            (0..5)
                .map(|n| rand::Rng::gen_range(&mut r, 0..*bases.at(n)))
                .collect(),
            (5..5 + bases.per().len())
                .map(|n| rand::Rng::gen_range(&mut r, 0..*bases.at(n)))
                .collect(),
        )
        .unwrap();
        let mut den = BigInt::from(1);
        let mut approx = q(0, 1);
        for n in 0..80 {
            den *= *bases.at(n);
            approx += radixforge::Rational::new(BigInt::from(*digits.at(n)), den.clone());
        }
        let v = cantor_value(&digits, &bases, None).unwrap();
        assert!(!(&v - &approx).is_negative());
        assert!(v - approx <= radixforge::Rational::new(BigInt::from(1), den));
    }
}

#[test]
fn distinct_non_terminating_points_have_distinct_images() {
    let mut r = rng(14);
    for _ in 0..1000 {
        let base = if rand::Rng::gen_bool(&mut r, 0.5) {
            2
        } else {
            3
        };
        let sch = random_schedule(&mut r, base, 3);
        let pick = |r: &mut rand_chacha::ChaCha8Rng| loop {
            let x = random_unit(r, 200);
            if x.denom().gcd(&BigInt::from(base)) == BigInt::from(1) && *x.denom() > BigInt::from(1)
            {
                return x;
            }
        };
        let (x1, x2) = (pick(&mut r), pick(&mut r));
        if x1 != x2 {
            assert_ne!(
                pseudo_value(&x1, &sch).unwrap(),
                pseudo_value(&x2, &sch).unwrap()
            );
        }
    }
}

#[test]
fn preimages_have_one_or_two_points() {
    let mut r = rng(15);
    for _ in 0..300 {
        let base = if rand::Rng::gen_bool(&mut r, 0.5) {
            2
        } else {
            3
        };
        let sch = random_schedule(&mut r, base, 2);
        let y = random_unit(&mut r, 64);
        let pre = preimages(&y, &sch).unwrap();
        assert!(pre.len() == 1 || pre.len() == 2, "y = {y}");
        for x in &pre {
            let c = classify_point(x, &sch).unwrap();
            assert!(c.images.iter().any(|i| i.value == y));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverse_undoes_transform(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = if rand::Rng::gen_bool(&mut r, 0.5) { 2 } else { 3 };
        let sch = random_schedule(&mut r, base, 3);
        let w = random_word(&mut r, base, 4, 3).canonical();
        let image = transform(&w, &sch).unwrap();
        prop_assert_eq!(inverse_transform(&image, &sch).unwrap().canonical(), w.clone());
        let x = w.value();
        prop_assert_eq!(expand(&x, base).unwrap().value(), x);
    }
}
