//! Consistency checks between the abstract computations and the oracle,
//! plus the invariant suites.

use serde::Serialize;

use crate::centralizer::{center_torsion_surjection_check, extended_subsets, CartanType};
use crate::error::Result;
use crate::finite_torus::{character_orbits, norm_map};
use crate::oracle::{self, MatrixFamily, MatrixGroupSpec};
use crate::partition::{d_map, is_special, partitions, satisfies_parity};
use crate::root_datum::{standard_datum, BasedRootDatum, Family, GaloisTwist};
use crate::weil_deligne::enumerate_special_wd;
use crate::weil_params::{torus_langlands, ParameterSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn equal<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, got: T, want: T) -> Self {
        let detail = format!("{got:?} vs {want:?}");
        Check::new(name, got == want, detail)
    }
}

/// `|T_x(F_q)|` from the Smith form against field enumeration, per twisted class.
pub fn torus_order_checks(space: &ParameterSpace) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (i, class) in space.twisted_classes().iter().enumerate() {
        let snf = space.fixed_group(&class.representative)?.order() as u64;
        let brute = oracle::torus_point_count(&class.representative.combined, space.q)?;
        out.push(Check::equal(format!("torus order, class {i}"), snf, brute));
    }
    Ok(out)
}

/// Rigid classes against character orbits of `Z_W(x)` on `T_x(F_q)`.
pub fn rigid_orbit_check(space: &ParameterSpace) -> Result<Check> {
    let rigid = space.enumerate_rigid()?.len();
    let mut orbits = 0;
    for class in space.twisted_classes() {
        let g = space.fixed_group(&class.representative)?;
        let autos: Vec<_> = space.coset.centralizer(&class.representative).iter().map(|&u| space.coset.weyl.matrix(u).clone()).collect();
        orbits += character_orbits(&g, &autos)?.len();
    }
    Ok(Check::equal("rigid classes = character orbits", rigid, orbits))
}

/// `x^m v = q^m v` for every rigid parameter and `m` up to the order of `x`.
pub fn frobenius_compatibility(space: &ParameterSpace) -> Result<Check> {
    let rigid = space.enumerate_rigid()?;
    let mut bad = 0;
    for r in &rigid {
        let x = &r.parameter.frob.combined;
        let v = &r.parameter.inertial;
        let order = x.order(64).unwrap_or(1);
        for m in 1..=order {
            if v.apply(&x.pow(m)) != v.scale(space.q.pow(m)) {
                bad += 1;
            }
        }
    }
    Ok(Check::new("Frobenius compatibility", bad == 0, format!("{} rigid parameters, {bad} failures", rigid.len())))
}

/// The matrix group matching a standard family, if the oracle can build it.
pub fn oracle_spec(family: Family, n: usize, q: i64) -> Option<MatrixGroupSpec> {
    let f = match family {
        Family::GL => MatrixFamily::GL,
        Family::SL => MatrixFamily::SL,
        Family::Sp => MatrixFamily::Sp,
        _ => return None,
    };
    let spec = MatrixGroupSpec::new(f, n, q as u64).ok()?;
    (spec.classical_order()? <= oracle::matgroup::MAX_GROUP as u128).then_some(spec)
}

/// `sum |Irr(A_phi)|` over special WD classes against the class count of `G(F_q)`.
pub fn class_count_check(space: &ParameterSpace, spec: MatrixGroupSpec) -> Result<Check> {
    let total = enumerate_special_wd(space)?.total_irr;
    let classes = oracle::conj_class_count(spec)?;
    Ok(Check::equal(format!("sum |Irr(A_phi)| = classes of {}{}(F_{})", spec.family, spec.n, spec.q), total, classes))
}

pub fn torus_bijection_check(datum: &BasedRootDatum, twist: &GaloisTwist, q: i64) -> Result<Check> {
    let b = torus_langlands(datum, twist, q)?;
    let count = oracle::torus_point_count(&twist.matrix, q)?;
    let ok = b.is_bijective() && b.parameters.len() as u64 == count;
    Ok(Check::new("torus bijection", ok, format!("{} parameters, {} characters, {count} points", b.parameters.len(), b.characters.len())))
}

/// Every standard constructor up to semisimple rank `max_rank`.
pub fn standard_data(max_rank: usize) -> Vec<(String, BasedRootDatum)> {
    let mut out = Vec::new();
    for n in 1..=max_rank + 1 {
        for f in [Family::GL, Family::SL, Family::PGL] {
            if n > 1 || f == Family::GL {
                out.push((format!("{f}{n}"), standard_datum(f, n).expect("valid")));
            }
        }
    }
    for k in 1..=max_rank {
        out.push((format!("Sp{}", 2 * k), standard_datum(Family::Sp, 2 * k).expect("valid")));
        out.push((format!("SO{}", 2 * k + 1), standard_datum(Family::SO, 2 * k + 1).expect("valid")));
        if k >= 2 {
            out.push((format!("SO{}", 2 * k), standard_datum(Family::SO, 2 * k).expect("valid")));
        }
    }
    for n in 1..=max_rank {
        out.push((format!("T{n}"), BasedRootDatum::torus(n)));
    }
    out
}

pub fn dualize_involution(data: &[(String, BasedRootDatum)]) -> Check {
    let bad: Vec<&str> = data.iter().filter(|(_, d)| d.dualize().dualize() != *d).map(|(n, _)| n.as_str()).collect();
    Check::new("dualize is an involution", bad.is_empty(), format!("{} data, failures {bad:?}", data.len()))
}

pub fn norm_checks(triples: &[(i64, u32, u32)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(q, m, d) in triples {
        let w = oracle::norm_surjectivity_check(q, m, d)?;
        let model = norm_map(q, m, d)?;
        let qm = q.pow(m);
        let want = (qm.pow(d) - 1) / (qm - 1);
        let ok = w.surjective && w.kernel_order as i64 == want && model.kernel_order == want;
        out.push(Check::new(format!("norm (q,m,d)=({q},{m},{d})"), ok, format!("kernel {} (model {}), expected {want}", w.kernel_order, model.kernel_order)));
    }
    Ok(out)
}

/// Injectivity of `(X/ZI)_tor -> (X/ZDelta)_tor` over all extended-diagram subsets.
pub fn center_torsion(data: &[(String, BasedRootDatum)]) -> Result<Check> {
    let mut total = 0;
    let mut failures = Vec::new();
    for (name, d) in data {
        for subset in extended_subsets(d) {
            total += 1;
            if !center_torsion_surjection_check(d, &subset)?.injective {
                failures.push(format!("{name} {subset:?}"));
            }
        }
    }
    let detail = match failures.first() {
        None => format!("{total} subsets"),
        Some(first) => format!("{} of {total} subsets fail, first {first}", failures.len()),
    };
    Ok(Check::new("center-torsion injectivity", failures.is_empty(), detail))
}

/// `d(d(d(l))) = d(l)`, and specialness by parity agrees with `d(d(l)) = l`.
pub fn duality_suite(max_n: usize) -> Check {
    let mut count = 0;
    let mut bad = Vec::new();
    for kind in [CartanType::B, CartanType::C, CartanType::D] {
        for n in 1..=max_n {
            let ok_size = match kind {
                CartanType::B => n % 2 == 1,
                _ => n % 2 == 0,
            };
            if !ok_size {
                continue;
            }
            for l in partitions(n).into_iter().filter(|l| satisfies_parity(kind, l)) {
                count += 1;
                let d = d_map(kind, &l);
                let dd = d_map(kind, &d);
                if d_map(kind, &dd) != d || is_special(kind, &l) != (dd == l) || !satisfies_parity(kind, &d) {
                    bad.push(format!("{kind} {l:?}"));
                }
            }
        }
    }
    Check::new("duality d∘d∘d = d and specialness", bad.is_empty(), format!("{count} partitions, failures {bad:?}"))
}

/// Checks for one group: oracle comparisons plus the invariant suites.
pub fn verify_group(datum: &BasedRootDatum, twist: &GaloisTwist, q: i64, spec: Option<MatrixGroupSpec>, space: &ParameterSpace) -> Result<Vec<Check>> {
    let mut out = torus_order_checks(space)?;
    out.push(rigid_orbit_check(space)?);
    out.push(frobenius_compatibility(space)?);
    if !datum.has_roots() {
        out.push(torus_bijection_check(datum, twist, q)?);
    }
    if let Some(spec) = spec {
        out.push(class_count_check(space, spec)?);
    }
    let own = vec![("group".to_string(), datum.clone()), ("dual".to_string(), datum.dualize())];
    out.push(dualize_involution(&own));
    out.push(center_torsion(&own)?);
    out.extend(norm_checks(&[(3, 1, 2), (2, 1, 3), (2, 2, 2)])?);
    out.push(duality_suite(10));
    Ok(out)
}
