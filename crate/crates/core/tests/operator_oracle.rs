//! Operator norms against a brute-force supremum over every unit vector.

use std::collections::BTreeMap;
use std::num::NonZeroU64;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gf2space::{FinSupportVec, Operator};

const DIM: u32 = 8;

/// Columns as bitmasks over {1..DIM}; index 0 is e_1.
fn random_columns(rng: &mut ChaCha8Rng) -> [u8; DIM as usize] {
    let mut cols = [0u8; DIM as usize];
    let density = rng.gen_range(0.0..1.0);
    for c in cols.iter_mut() {
        if rng.gen_bool(density) {
            *c = rng.gen();
        }
    }
    cols
}

fn to_operator(cols: &[u8; DIM as usize], store_zero_columns: bool) -> Operator {
    let mut map = BTreeMap::new();
    for (k, &c) in cols.iter().enumerate() {
        if c != 0 || store_zero_columns {
            map.insert(k as u64 + 1, FinSupportVec::unrank(u64::from(c)));
        }
    }
    Operator::Explicit(map)
}

/// sup{‖Tx‖ : ‖x‖ = 1, support(x) ⊆ {1..DIM}} computed on bitmasks.
fn brute_force_sup(cols: &[u8; DIM as usize]) -> u8 {
    (1u32..1 << DIM)
        .map(|x| {
            let image = (0..DIM)
                .filter(|k| x >> k & 1 == 1)
                .fold(0u8, |acc, k| acc ^ cols[k as usize]);
            u8::from(image != 0)
        })
        .max()
        .unwrap()
}

#[test]
fn random_explicit_operators_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let bound = NonZeroU64::new(u64::from(DIM)).unwrap();
    let mut zero_seen = false;
    for n in 0..300 {
        let cols = if n == 0 {
            [0; DIM as usize]
        } else {
            random_columns(&mut rng)
        };
        let t = to_operator(&cols, n % 2 == 0);
        let expected = brute_force_sup(&cols);
        let norm = t.operator_norm(bound);
        assert_eq!(norm.norm, expected, "{cols:?}");
        assert!(norm.exact);
        zero_seen |= expected == 0;

        let witness = t.attainment_witness(bound).unwrap();
        assert_eq!(witness.norm(), 1);
        assert_eq!(t.apply(&witness).norm(), norm.norm);
        if expected == 1 {
            // smallest basis vector with a non-zero column
            let first = cols.iter().position(|&c| c != 0).unwrap() as u64 + 1;
            assert_eq!(witness, FinSupportVec::basis(first).unwrap());
            assert_eq!(norm.witness, Some(witness));
        }
    }
    assert!(zero_seen);
}

#[test]
fn cancelling_columns_still_have_norm_one() {
    let t = Operator::parse("1 -> {1}\n2 -> {1}").unwrap();
    let cols = [1, 1, 0, 0, 0, 0, 0, 0];
    assert_eq!(brute_force_sup(&cols), 1);
    assert_eq!(t.operator_norm(NonZeroU64::MIN).norm, 1);
    assert!(t.apply(&"{1,2}".parse().unwrap()).is_zero());
}

#[test]
fn rule_operators_against_truncated_oracle() {
    // identity and shifts restricted to {1..DIM}: column k maps into {1..DIM+1}
    let truncated = |t: &Operator| -> Vec<u64> {
        (1..=u64::from(DIM))
            .map(|i| t.column(i).rank(gf2space::RankWidth::MAX).unwrap())
            .collect()
    };
    for t in [
        Operator::Identity,
        Operator::ShiftLeft,
        Operator::ShiftRight,
    ] {
        let cols = truncated(&t);
        let sup = (1u32..1 << DIM)
            .map(|x| {
                let image = (0..DIM)
                    .filter(|k| x >> k & 1 == 1)
                    .fold(0u64, |acc, k| acc ^ cols[k as usize]);
                u8::from(image != 0)
            })
            .max()
            .unwrap();
        let norm = t.operator_norm(NonZeroU64::new(u64::from(DIM)).unwrap());
        assert_eq!(norm.norm, sup, "{t:?}");
        assert!(norm.exact);
        let w = norm.witness.unwrap();
        assert_eq!(t.apply(&w).norm(), 1);
    }
}
