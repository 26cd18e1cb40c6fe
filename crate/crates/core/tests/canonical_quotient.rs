//! Order of the canonical quotient on special classes, against the count of
//! singular entries of the Lusztig symbol.

use std::collections::BTreeSet;

use fq_langlands::centralizer::CartanType;
use fq_langlands::partition::{is_special, is_very_even, partitions, satisfies_parity};
use fq_langlands::weil_deligne::{factor_a_group, FactorOrbit, VeryEvenTag};

fn symbol_order(kind: CartanType, lambda: &[usize]) -> usize {
    let mut parts: Vec<usize> = lambda.iter().rev().copied().collect();
    let want_odd = kind != CartanType::D;
    if (parts.len() % 2 == 1) != want_odd {
        parts.insert(0, 0);
    }
    let (mut top, mut bottom) = (BTreeSet::new(), BTreeSet::new());
    for (i, p) in parts.iter().enumerate() {
        let mu = p + i;
        let to_top = match kind {
            CartanType::C => mu % 2 == 0,
            _ => mu % 2 == 1,
        };
        if to_top {
            top.insert(mu / 2);
        } else {
            bottom.insert(mu / 2);
        }
    }
    let s = top.symmetric_difference(&bottom).count();
    let e = match kind {
        CartanType::D => (s / 2).saturating_sub(1),
        _ => (s - 1) / 2,
    };
    1 << e
}

#[test]
fn canonical_quotient_matches_symbol() {
    let mut checked = 0;
    for kind in [CartanType::B, CartanType::C, CartanType::D] {
        for n in 2..=10 {
            let rank = match kind {
                CartanType::B if n % 2 == 1 => (n - 1) / 2,
                CartanType::C | CartanType::D if n % 2 == 0 => n / 2,
                _ => continue,
            };
            if kind == CartanType::D && rank < 4 {
                continue;
            }
            for l in partitions(n).into_iter().filter(|l| satisfies_parity(kind, l) && is_special(kind, l)) {
                let tag = (kind == CartanType::D && is_very_even(&l)).then_some(VeryEvenTag::I);
                let o = FactorOrbit { kind, rank, partition: l.clone(), tag };
                let g = factor_a_group(&o);
                assert_eq!(g.abar.order(), symbol_order(kind, &l), "{kind} {l:?}");
                assert_eq!(g.a.order() % g.abar.order(), 0);
                checked += 1;
            }
        }
    }
    assert!(checked > 40, "{checked}");
}
