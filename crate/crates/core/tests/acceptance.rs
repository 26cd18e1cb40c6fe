//! Acceptance battery: one line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Exit status is nonzero if a criterion fails for any reason other than the
//! known false universal claim inside criterion 6 (see the notes printed there).

use std::collections::BTreeSet;
use std::process::ExitCode;

use fq_langlands::centralizer::{center_torsion_surjection_check, extended_diagram, extended_subsets, CartanType};
use fq_langlands::oracle::{conj_class_count, norm_surjectivity_check, torus_point_count, MatrixGroupSpec};
use fq_langlands::partition::{d_map, partitions, satisfies_parity};
use fq_langlands::root_datum::{standard_datum, BasedRootDatum, Family, GaloisTwist};
use fq_langlands::verify::{rigid_orbit_check, standard_data};
use fq_langlands::weil_deligne::enumerate_special_wd;
use fq_langlands::weil_params::{Bounds, ParameterSpace};

struct Outcome {
    passed: bool,
    summary: String,
    notes: Vec<String>,
    /// Failure fully explained by a known false claim.
    explained: bool,
}

impl Outcome {
    fn new(passed: bool, summary: String) -> Self {
        Outcome { passed, summary, notes: Vec::new(), explained: false }
    }
}

fn split(f: Family, n: usize, q: i64) -> (BasedRootDatum, ParameterSpace) {
    let d = standard_datum(f, n).expect("datum");
    let s = ParameterSpace::for_group(&d, &GaloisTwist::trivial(d.rank), q, Bounds::default()).expect("space");
    (d, s)
}

/// `|det(q - M)|` by cofactor expansion, independent of the Smith form.
fn det_q_minus(m: &fq_langlands::matrix::Matrix, q: i64) -> i64 {
    let n = m.rows();
    let a: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { q - m[(i, j)] } else { -m[(i, j)] }).collect()).collect();
    fn det(a: &[Vec<i64>]) -> i64 {
        if a.len() == 1 {
            return a[0][0];
        }
        (0..a.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = a[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * a[0][c] * det(&minor)
            })
            .sum()
    }
    det(&a).abs()
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, n, q, want) in [(Family::GL, 2, 3, Some(vec![4, 8])), (Family::GL, 3, 2, Some(vec![1, 3, 7])), (Family::Sp, 4, 2, None)] {
        let (_, s) = split(f, n, q);
        let mut orders = BTreeSet::new();
        for c in s.twisted_classes() {
            let x = &c.representative.combined;
            let snf = s.fixed_group(&c.representative).expect("torus").order();
            let field = torus_point_count(x, q).expect("oracle") as i64;
            ok &= snf == field && snf == det_q_minus(x, q);
            orders.insert(snf);
        }
        if let Some(w) = want {
            ok &= orders == w.into_iter().collect();
        }
        parts.push(format!("{f}{n}/q={q} {orders:?}"));
    }
    Outcome::new(ok, format!("torus-order identity (Smith form = field enumeration): {}", parts.join("; ")))
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, n, q, want) in [(Family::GL, 2, 3, 8), (Family::GL, 3, 2, 6)] {
        let (_, s) = split(f, n, q);
        let rigid = s.enumerate_rigid().expect("rigid").len();
        let check = rigid_orbit_check(&s).expect("orbits");
        ok &= check.passed && rigid == want;
        parts.push(format!("{f}{n}(F_{q}) {rigid} rigid, orbits {}", check.detail));
    }
    Outcome::new(ok, format!("rigid classes = character orbits: {}", parts.join("; ")))
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, n, q, name) in [(Family::GL, 2, 3, "GL2:3"), (Family::SL, 2, 3, "SL2:3"), (Family::GL, 3, 2, "GL3:2")] {
        let (_, s) = split(f, n, q);
        let total = enumerate_special_wd(&s).expect("wd").total_irr;
        let classes = conj_class_count(name.parse::<MatrixGroupSpec>().expect("spec")).expect("oracle");
        ok &= total == classes;
        parts.push(format!("{f}{n}(F_{q}) {total} = {classes}"));
    }
    Outcome::new(ok, format!("sum |Irr(A_phi)| = conjugacy classes: {}", parts.join("; ")))
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (label, f, n, want) in [("A1", Family::SL, 2, 2), ("A2", Family::SL, 3, 3), ("B2", Family::SO, 5, 5), ("C2", Family::Sp, 4, 5)] {
        let (_, s) = split(f, n, 2);
        let got = s.twisted_classes().len();
        ok &= got == want;
        parts.push(format!("{label} {got}"));
    }
    Outcome::new(ok, format!("split twisted-class counts: {}", parts.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    for (f, n) in [(Family::GL, 2), (Family::SL, 2)] {
        let (d, s) = split(f, n, 3);
        let dual = d.dualize();
        let w_order = s.weyl_order();
        for c in s.inertial_classes().expect("inertial") {
            let v = &c.representative;
            let r_empty = !dual.roots.iter().any(|a| v.pairs_integrally(a));
            for &x in &s.inertial_data(v).frobenius {
                let frob = s.coset.element(x);
                let bound = s.packet_size_bound(v, &frob).expect("bound");
                checked += 1;
                ok &= (bound == 1) == r_empty;
                if v.is_zero() && frob.combined.is_identity() {
                    ok &= bound == w_order;
                }
            }
        }
    }
    Outcome::new(ok, format!("packet bound is 1 iff R_v is empty, |W| at v = 0 split: {checked} (v, x) pairs"))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    let data = standard_data(4);

    let dual_ok = data.iter().all(|(_, d)| d.dualize().dualize() == *d);
    notes.push(format!("[{}] dualize involution on {} constructors", tag(dual_ok), data.len()));

    let mut compat_ok = true;
    let mut rigid_count = 0;
    for (f, n, q) in [(Family::GL, 2, 3), (Family::GL, 3, 2), (Family::SL, 2, 3), (Family::Sp, 4, 2), (Family::Sp, 4, 3), (Family::SO, 5, 3), (Family::SL, 3, 4)] {
        let (_, s) = split(f, n, q);
        for r in s.enumerate_rigid().expect("rigid") {
            rigid_count += 1;
            let x = &r.parameter.frob.combined;
            let v = &r.parameter.inertial;
            let order = x.order(64).expect("finite order");
            for m in 1..=order {
                compat_ok &= v.apply(&x.pow(m)) == v.scale(q.pow(m));
            }
        }
    }
    notes.push(format!("[{}] Frobenius compatibility x^m v = q^m v on {rigid_count} rigid parameters", tag(compat_ok)));

    let mut norm_ok = true;
    for (q, m, d) in [(3i64, 1u32, 2u32), (2, 1, 3), (2, 2, 2)] {
        let w = norm_surjectivity_check(q, m, d).expect("norm");
        let qm = q.pow(m) as u64;
        norm_ok &= w.surjective && w.kernel_order == (qm.pow(d) - 1) / (qm - 1);
    }
    notes.push(format!("[{}] norm surjectivity and kernel order for (3,1,2), (2,1,3), (2,2,2)", tag(norm_ok)));

    // center torsion over all extended-diagram subsets
    let (mut total, mut levi_fail, mut nonlevi_fail) = (0, 0, Vec::new());
    for (name, d) in &data {
        let affine: BTreeSet<Vec<i64>> = extended_diagram(d).into_iter().filter(|n| n.affine).map(|n| n.root).collect();
        for subset in extended_subsets(d) {
            total += 1;
            if !center_torsion_surjection_check(d, &subset).expect("check").injective {
                if subset.iter().any(|r| affine.contains(r)) {
                    nonlevi_fail.push(format!("{name} {subset:?}"));
                } else {
                    levi_fail += 1;
                }
            }
        }
    }
    let torsion_ok = levi_fail == 0 && nonlevi_fail.is_empty();
    notes.push(format!(
        "[{}] center-torsion injectivity: {} of {total} subsets fail, {levi_fail} of them inside the simple roots; first failure {}",
        tag(torsion_ok),
        nonlevi_fail.len() + levi_fail,
        nonlevi_fail.first().map(String::as_str).unwrap_or("none")
    ));
    if !nonlevi_fail.is_empty() {
        notes.push("       every failure uses the affine node: the claim holds for Levi subsets only and is false for pseudo-Levi ones".into());
    }

    // d∘d = d literally, and the consistent reading d∘d∘d = d
    let (mut count, mut literal_fail, mut triple_fail) = (0, 0, 0);
    let mut first_literal = None;
    for kind in [CartanType::B, CartanType::C, CartanType::D] {
        for n in 1..=10 {
            if (kind == CartanType::B) != (n % 2 == 1) {
                continue;
            }
            for l in partitions(n).into_iter().filter(|l| satisfies_parity(kind, l)) {
                count += 1;
                let d = d_map(kind, &l);
                let dd = d_map(kind, &d);
                if dd != d {
                    literal_fail += 1;
                    first_literal.get_or_insert(format!("{kind} {l:?}: d = {d:?}, d∘d = {dd:?}"));
                }
                if d_map(kind, &dd) != d {
                    triple_fail += 1;
                }
            }
        }
    }
    notes.push(format!(
        "[{}] d∘d = d as stated: {literal_fail} of {count} partitions fail, e.g. {}",
        tag(literal_fail == 0),
        first_literal.as_deref().unwrap_or("none")
    ));
    notes.push(format!("[{}] d∘d∘d = d (d is an involution on its special image): {triple_fail} failures", tag(triple_fail == 0)));

    let passed = dual_ok && compat_ok && norm_ok && torsion_ok && literal_fail == 0 && triple_fail == 0;
    let explained = dual_ok && compat_ok && norm_ok && levi_fail == 0 && triple_fail == 0;
    let mut o = Outcome::new(passed, "property suites".into());
    o.notes = notes;
    o.explained = explained;
    o
}

fn tag(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(usize, fn() -> Outcome)> = vec![(1, criterion_1), (2, criterion_2), (3, criterion_3), (4, criterion_4), (5, criterion_5), (6, criterion_6)];
    let mut unexplained = 0;
    for (i, run) in criteria {
        let o = run();
        println!("[{}] criterion {i}: {}", if o.passed { "PASS" } else { "FAIL" }, o.summary);
        for n in &o.notes {
            println!("    {n}");
        }
        if !o.passed && !o.explained {
            unexplained += 1;
        }
    }
    if unexplained == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexplained} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
