use num_integer::Integer;

use crate::error::{Error, Result};

/// `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: i64) -> Option<(i64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q % d == 0).unwrap_or(q);
    let mut r = q;
    let mut e = 0;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

pub fn check_q(q: i64) -> Result<(i64, u32)> {
    prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("q = {q} is not a prime power")))
}

pub fn checked_pow(base: i64, e: u32) -> Result<i64> {
    base.checked_pow(e).ok_or(Error::Overflow("power"))
}

/// Least m >= 1 with q^m = 1 mod n.
pub fn multiplicative_order(q: i64, n: i64) -> Option<u32> {
    if n == 1 {
        return Some(1);
    }
    if q.gcd(&n) != 1 {
        return None;
    }
    let mut x = q.rem_euclid(n) as i128;
    let n128 = n as i128;
    for m in 1..=n as u32 {
        if x == 1 {
            return Some(m);
        }
        x = x * (q as i128) % n128;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(multiplicative_order(3, 8), Some(2));
        assert_eq!(multiplicative_order(3, 4), Some(2));
        assert_eq!(multiplicative_order(2, 4), None);
    }
}
