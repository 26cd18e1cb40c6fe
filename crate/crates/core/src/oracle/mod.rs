//! Independent brute-force ground truth over explicit finite fields.

pub mod field;
pub mod matgroup;

use serde::Serialize;

pub use field::SmallField;
pub use matgroup::{conj_class_count, MatrixFamily, MatrixGroup, MatrixGroupSpec};

use crate::arith::check_q;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Cap on the number of tuples enumerated by `torus_point_count`.
pub const MAX_TUPLES: u64 = 5_000_000;

/// Number of `t` in `(F_{q^m}^x)^r` with `t_j = (prod_i t_i^{M_ji})^q`, where `m`
/// is the order of `M`. These are the points of the torus fixed by the
/// Frobenius `q M`; all of them are defined over `F_{q^m}`.
pub fn torus_point_count(x: &Matrix, q: i64) -> Result<u64> {
    check_q(q)?;
    let r = x.rows();
    let m = x.order(64).ok_or_else(|| Error::InvalidArgument("matrix of infinite or large order".into()))?;
    let size = (q as u64).checked_pow(m).ok_or(Error::Overflow("field size"))?;
    let field = SmallField::new(size)?;
    let units = size - 1;
    let tuples = units.checked_pow(r as u32).filter(|&t| t <= MAX_TUPLES);
    let Some(tuples) = tuples else {
        return Err(Error::BoundExceeded { what: "torus tuples", bound: MAX_TUPLES, size: units.saturating_pow(r as u32) });
    };
    let unit_list: Vec<u32> = field.units().collect();
    let mut count = 0;
    let mut t = vec![0usize; r];
    for _ in 0..tuples {
        let pt: Vec<u32> = t.iter().map(|&i| unit_list[i]).collect();
        let fixed = (0..r).all(|j| {
            let prod = (0..r).fold(1, |acc, i| field.mul(acc, field.pow(pt[i], x[(j, i)])));
            field.pow(prod, q) == pt[j]
        });
        if fixed {
            count += 1;
        }
        for slot in t.iter_mut() {
            *slot += 1;
            if *slot < unit_list.len() {
                break;
            }
            *slot = 0;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormWitness {
    pub source_order: u64,
    pub target_order: u64,
    pub image_size: u64,
    pub kernel_order: u64,
    pub surjective: bool,
}

/// The norm `F_{q^{md}}^x -> F_{q^m}^x`, `x -> prod_k x^{q^{mk}}`, by enumeration.
pub fn norm_surjectivity_check(q: i64, m: u32, d: u32) -> Result<NormWitness> {
    check_q(q)?;
    let small = (q as u64).checked_pow(m).ok_or(Error::Overflow("field size"))?;
    let big = small.checked_pow(d).ok_or(Error::Overflow("field size"))?;
    let field = SmallField::new(big)?;
    let mut image = std::collections::BTreeSet::new();
    let mut kernel = 0;
    for x in field.units() {
        let mut n = 1;
        let mut conj = x;
        for _ in 0..d {
            n = field.mul(n, conj);
            conj = field.pow(conj, small as i64);
        }
        if field.pow(n, small as i64) != n {
            return Err(Error::Incompatible(format!("norm of {x} left the subfield")));
        }
        if n == 1 {
            kernel += 1;
        }
        image.insert(n);
    }
    let image_size = image.len() as u64;
    Ok(NormWitness { source_order: big - 1, target_order: small - 1, image_size, kernel_order: kernel, surjective: image_size == small - 1 })
}
