//! Explicit finite fields `F_p[x]/(f)`, elements encoded as integers whose
//! base-`p` digits are the polynomial coefficients.

use crate::arith::prime_power;
use crate::error::{Error, Result};

/// Largest field the oracle builds.
pub const MAX_FIELD: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct SmallField {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    generator: u32,
}

fn poly_mod(mut a: Vec<u32>, f: &[u32], p: u32) -> Vec<u32> {
    let d = f.len() - 1;
    let lead_inv = inv_mod(f[d], p);
    while a.len() > d {
        let top = a.pop().expect("nonempty");
        if top == 0 {
            continue;
        }
        let c = top * lead_inv % p;
        let shift = a.len() - d;
        for i in 0..d {
            a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
        }
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("p prime")
}

/// Whether the monic polynomial `f` (low to high coefficients) is irreducible over `F_p`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    for d in 1..=m / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = digits(code, p, d as usize);
            g.push(1);
            if poly_mod(f.to_vec(), &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (code % p as u64) as u32;
            code /= p as u64;
            d
        })
        .collect()
}

/// Monic irreducible polynomials of degree `m`, in increasing code order.
pub fn irreducible_polynomials(p: u32, m: u32) -> Vec<Vec<u32>> {
    (0..(p as u64).pow(m))
        .map(|c| {
            let mut f = digits(c, p, m as usize);
            f.push(1);
            f
        })
        .filter(|f| is_irreducible(f, p))
        .collect()
}

impl SmallField {
    /// `F_q` with the first irreducible modulus in the deterministic order.
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q as i64).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        let f = irreducible_polynomials(p as u32, m).into_iter().next().expect("irreducibles exist");
        Self::with_modulus(p as u32, f)
    }

    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let m = modulus.len() as u32 - 1;
        let size64 = (p as u64).pow(m);
        if size64 > MAX_FIELD {
            return Err(Error::BoundExceeded { what: "field size", bound: MAX_FIELD, size: size64 });
        }
        if !is_irreducible(&modulus, p) || modulus[m as usize] != 1 {
            return Err(Error::InvalidArgument(format!("modulus {modulus:?} is not monic irreducible over F_{p}")));
        }
        let size = size64 as u32;
        let mut field = SmallField { p, m, modulus, size, exp: Vec::new(), log: Vec::new(), generator: 0 };
        let n = size - 1;
        for g in 1..size {
            let mut exp = Vec::with_capacity(n as usize);
            let mut x = 1;
            loop {
                exp.push(x);
                x = field.poly_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() as u32 == n {
                let mut log = vec![0; size as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                field.exp = exp;
                field.log = log;
                field.generator = g;
                break;
            }
        }
        log::info!("F_{} modelled as F_{}[x]/{:?}, generator {}", size, p, field.modulus, field.generator);
        Ok(field)
    }

    fn poly_mul(&self, a: u32, b: u32) -> u32 {
        let m = self.m as usize;
        let (da, db) = (digits(a as u64, self.p, m), digits(b as u64, self.p, m));
        let mut prod = vec![0u32; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        let r = poly_mod(prod, &self.modulus, self.p);
        r.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn order(&self) -> u32 {
        self.size
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A generator of the multiplicative group.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.size - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.size - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.size - 1) as i64;
        self.exp[((self.log[a as usize] as i64 * e).rem_euclid(n)) as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size
    }

    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_f9() {
        let f = SmallField::new(9).unwrap();
        assert_eq!(f.order(), 9);
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.pow(a, 8), 1);
            }
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.poly_mul(a, b));
            }
        }
    }

    #[test]
    fn irreducible_counts() {
        // necklace counts (1/m) sum mu(d) p^(m/d)
        assert_eq!(irreducible_polynomials(2, 2).len(), 1);
        assert_eq!(irreducible_polynomials(2, 3).len(), 2);
        assert_eq!(irreducible_polynomials(3, 2).len(), 3);
        assert_eq!(irreducible_polynomials(2, 4).len(), 3);
    }

    #[test]
    fn rejects_reducible_modulus() {
        assert!(SmallField::with_modulus(3, vec![2, 0, 1]).is_err());
        assert!(SmallField::new(6).is_err());
    }
}
