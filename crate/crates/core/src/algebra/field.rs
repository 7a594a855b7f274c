//! Table-based arithmetic in `GF(p^k)`.
//!
//! Element `e` is the polynomial `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` with
//! `e = c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, so the integer order of the
//! elements is the lexicographic order of their coefficient vectors (highest
//! degree most significant). `0` and `1` are the additive and multiplicative
//! identities.

use crate::error::{Error, Result};

/// Monic modulus for each supported extension field, low coefficient first.
///
/// ```text
/// GF(4)   x^2 + x + 1          GF(9)   x^2 + 1
/// GF(8)   x^3 + x + 1          GF(27)  x^3 + 2x + 1
/// GF(16)  x^4 + x + 1          GF(81)  x^4 + 2x^3 + 2
/// GF(32)  x^5 + x^2 + 1        GF(25)  x^2 + x + 2
/// GF(64)  x^6 + x + 1          GF(125) x^3 + 3x + 3
/// GF(128) x^7 + x + 1          GF(49)  x^2 + x + 3
/// GF(256) x^8 + x^4 + x^3 + x^2 + 1
/// GF(121) x^2 + 7x + 2         GF(169) x^2 + 12x + 2
/// ```
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 1, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 1, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `Some((p, k))` when `g = p^k` with `p` prime.
pub fn prime_power(g: u32) -> Option<(u32, u32)> {
    if g < 2 {
        return None;
    }
    let p = (2..=g).find(|d| g.is_multiple_of(*d))?;
    let mut rest = g;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, k))
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    order: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl FiniteField {
    pub fn new(order: u32) -> Result<Self> {
        let (p, k) = prime_power(order)
            .ok_or_else(|| Error::unsupported(format!("{order} is not a prime power")))?;
        let modulus: Vec<u32> = if k == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|&&(mp, mk, _)| (mp, mk) == (p, k))
                .map(|&(_, _, m)| m.to_vec())
                .ok_or_else(|| {
                    Error::unsupported(format!("no modulus tabulated for GF({order})"))
                })?
        };
        let n = order as usize;
        let digits = |e: u32| -> Vec<u32> { (0..k).map(|i| (e / p.pow(i)) % p).collect() };
        let from_digits = |d: &[u32]| -> u32 {
            d.iter()
                .enumerate()
                .map(|(i, &c)| c * p.pow(i as u32))
                .sum()
        };

        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..order {
            let da = digits(a);
            for b in 0..order {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * order + b) as usize] = from_digits(&sum);

                let mut prod = vec![0u32; (2 * k) as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if k > 1 {
                    for deg in (k as usize..prod.len()).rev() {
                        let c = prod[deg];
                        if c == 0 {
                            continue;
                        }
                        // Subtract c * x^(deg-k) * modulus.
                        for (i, &m) in modulus.iter().enumerate() {
                            let idx = deg - k as usize + i;
                            prod[idx] = (prod[idx] + p * p - (c * m) % p) % p;
                        }
                    }
                }
                mul[(a * order + b) as usize] = from_digits(&prod[..k as usize]);
            }
        }
        let mut field = FiniteField {
            p,
            k,
            order,
            add,
            mul,
            neg: vec![0; n],
            inv: vec![0; n],
        };
        for a in 0..order {
            field.neg[a as usize] =
                (0..order).find(|&b| field.add(a, b) == 0).ok_or_else(|| {
                    Error::invariant(format!("no additive inverse of {a} in GF({order})"))
                })?;
            if a != 0 {
                field.inv[a as usize] =
                    (1..order).find(|&b| field.mul(a, b) == 1).ok_or_else(|| {
                        Error::invariant(format!(
                            "modulus for GF({order}) is reducible: {a} has no inverse"
                        ))
                    })?;
            }
        }
        if order <= 16 {
            field.check_axioms()?;
        }
        Ok(field)
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.order;
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::invariant(format!(
                        "GF({q}) not commutative at {a},{b}"
                    )));
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Err(Error::invariant(format!(
                            "GF({q}) axiom failure at {a},{b},{c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.order + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.order + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// Element to symbol of `[g] = {1..g}`.
    #[inline]
    pub fn to_symbol(e: u32) -> u8 {
        (e + 1) as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn every_tabulated_field_builds() {
        for g in [
            2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 256,
        ] {
            let f = FiniteField::new(g).unwrap_or_else(|e| panic!("GF({g}): {e}"));
            assert_eq!(f.order(), g);
        }
    }

    #[test]
    fn distributive_exhaustive_small() {
        for g in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(g).unwrap();
            for a in 0..g {
                for b in 0..g {
                    for c in 0..g {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_known_products() {
        // x * x = x + 1 under x^2 + x + 1.
        let f = FiniteField::new(4).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(matches!(FiniteField::new(6), Err(Error::Unsupported(_))));
    }
}
