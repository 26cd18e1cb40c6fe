//! Conjugacy-class counts from the WD enumeration, the matrix-group oracle,
//! and the classical closed formulas.

use fq_langlands::oracle::field::irreducible_polynomials;
use fq_langlands::oracle::{conj_class_count, MatrixGroup, MatrixGroupSpec, SmallField};
use fq_langlands::root_datum::{standard_datum, Family, GaloisTwist};
use fq_langlands::weil_deligne::enumerate_special_wd;
use fq_langlands::weil_params::{Bounds, ParameterSpace};

fn wd_total(f: Family, n: usize, q: i64) -> usize {
    let d = standard_datum(f, n).unwrap();
    let s = ParameterSpace::for_group(&d, &GaloisTwist::trivial(d.rank), q, Bounds::default()).unwrap();
    enumerate_special_wd(&s).unwrap().total_irr
}

// closed formulas for the number of classes
fn gl2(q: usize) -> usize {
    q * q - 1
}

fn sl2(q: usize) -> usize {
    if q % 2 == 0 { q + 1 } else { q + 4 }
}

fn sl3(q: usize) -> usize {
    if (q - 1) % 3 == 0 { q * q + q + 8 } else { q * q + q }
}

fn sp4(q: usize) -> usize {
    if q % 2 == 0 { q * q + 2 * q + 3 } else { q * q + 5 * q + 10 }
}

#[test]
fn class_counts_agree() {
    let cases = [
        ("GL2:5", Family::GL, 2, 5, gl2(5)),
        ("SL2:5", Family::SL, 2, 5, sl2(5)),
        ("SL2:4", Family::SL, 2, 4, sl2(4)),
        ("SL3:4", Family::SL, 3, 4, sl3(4)),
        ("SL3:2", Family::SL, 3, 2, sl3(2)),
        ("Sp4:2", Family::Sp, 4, 2, sp4(2)),
        ("Sp4:3", Family::Sp, 4, 3, sp4(3)),
    ];
    for (name, f, n, q, formula) in cases {
        let oracle = conj_class_count(name.parse().unwrap()).unwrap();
        assert_eq!(oracle, formula, "{name} oracle");
        assert_eq!(wd_total(f, n, q), formula, "{name} parameters");
    }
}

#[test]
fn oracle_ignores_choice_of_modulus() {
    let spec: MatrixGroupSpec = "GL2:9".parse().unwrap();
    let moduli = irreducible_polynomials(3, 2);
    assert_eq!(moduli.len(), 3);
    for m in moduli {
        let field = SmallField::with_modulus(3, m.clone()).unwrap();
        let g = MatrixGroup::enumerate(spec, field).unwrap();
        assert_eq!(g.order(), 5760, "{m:?}");
        assert_eq!(g.class_count(), gl2(9), "{m:?}");
    }
}
