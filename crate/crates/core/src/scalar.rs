//! Exact root-coordinate arithmetic.
//!
//! Every coefficient `2cos(π/m)` of the geometric representation lies in the
//! cyclotomic ring `Z[ζ_N]` where `N` is the least common multiple of `2m`
//! over the irrational entries of the Coxeter matrix. Scalars are stored as
//! integer coordinate vectors in the power basis `1, ζ, …, ζ^{d-1}`
//! (`d = φ(N)`), which is a Z-basis, so equality and hashing are exact.
//!
//! When every entry is in `{2, 3, ∞}` the ring is plain `Z` (`N = 1`, `d = 1`)
//! and signs are exact too. Otherwise the sign of a nonzero scalar is read off
//! a floating evaluation and must clear [`SIGN_MARGIN`].

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

/// Smallest magnitude accepted when deciding the sign of a nonzero scalar
/// from its floating evaluation.
pub const SIGN_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Multiplication by a fixed coefficient `2cos(π/m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Coefficient {
    Zero,
    Int(i64),
    /// Row-major `d × d` integer matrix acting on power-basis coordinates.
    Ring(Vec<i64>),
}

/// The ring `Z[ζ_N]` with its power-basis reduction tables.
#[derive(Debug, Clone)]
pub struct ScalarRing {
    order: usize,
    degree: usize,
    /// `ζ^k` reduced to the power basis, `k = 0..N`, flattened.
    powers: Vec<i64>,
    /// `cos(2πk/N)` for `k < d`.
    basis_values: Vec<f64>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Exact division of integer polynomials (coefficients low to high) by a
/// monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (t, &dc) in den.iter().enumerate() {
                rem[k + t] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Cyclotomic polynomial `Φ_n`, coefficients low to high.
pub(crate) fn cyclotomic(n: usize) -> Vec<i64> {
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

impl ScalarRing {
    /// Ring large enough to hold `2cos(π/m)` for every listed finite order.
    pub fn for_orders(orders: impl IntoIterator<Item = u32>) -> Self {
        let order = orders
            .into_iter()
            .filter(|&m| m > 3)
            .fold(1usize, |acc, m| lcm(acc, 2 * m as usize));
        Self::cyclotomic_ring(order)
    }

    fn cyclotomic_ring(order: usize) -> Self {
        let phi = cyclotomic(order);
        let degree = phi.len() - 1;
        let mut powers = vec![0i64; order * degree];
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for k in 0..order {
            powers[k * degree..(k + 1) * degree].copy_from_slice(&cur);
            // multiply by ζ and reduce x^d = -Σ φ_i x^i
            let top = cur[degree - 1];
            for t in (1..degree).rev() {
                cur[t] = cur[t - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for t in 0..degree {
                    cur[t] -= top * phi[t];
                }
            }
        }
        let basis_values = (0..degree)
            .map(|k| libm::cos(2.0 * PI * k as f64 / order as f64))
            .collect();
        Self {
            order,
            degree,
            powers,
            basis_values,
        }
    }

    /// `N` such that scalars live in `Z[ζ_N]`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of integer coordinates per scalar.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// True when the ring is `Z` and every sign test is exact.
    pub fn is_integral(&self) -> bool {
        self.degree == 1
    }

    fn power(&self, k: usize) -> &[i64] {
        let k = k % self.order;
        &self.powers[k * self.degree..(k + 1) * self.degree]
    }

    /// Coefficient `2cos(π/m)`; `None` encodes `m = ∞` (coefficient 2).
    pub(crate) fn coefficient(&self, m: Option<u32>) -> Coefficient {
        match m {
            None => Coefficient::Int(2),
            Some(1) => Coefficient::Int(-2),
            Some(2) => Coefficient::Zero,
            Some(3) => Coefficient::Int(1),
            Some(m) => {
                let m = m as usize;
                debug_assert_eq!(self.order % (2 * m), 0);
                let shift = self.order / (2 * m);
                let d = self.degree;
                let mut table = vec![0i64; d * d];
                for a in 0..d {
                    let up = self.power(a + shift);
                    let down = self.power(a + self.order - shift);
                    for row in 0..d {
                        table[row * d + a] = up[row] + down[row];
                    }
                }
                Coefficient::Ring(table)
            }
        }
    }

    /// Floating value of a scalar (real by construction).
    pub fn evaluate(&self, s: &[i64]) -> f64 {
        s.iter()
            .zip(&self.basis_values)
            .map(|(&c, &b)| c as f64 * b)
            .sum()
    }

    pub fn sign(&self, s: &[i64]) -> Result<Sign> {
        if s.iter().all(|&c| c == 0) {
            return Ok(Sign::Zero);
        }
        if self.degree == 1 {
            return Ok(if s[0] > 0 {
                Sign::Positive
            } else {
                Sign::Negative
            });
        }
        let v = self.evaluate(s);
        if v.abs() <= SIGN_MARGIN {
            Err(Error::Precision { value: v })
        } else if v > 0.0 {
            Ok(Sign::Positive)
        } else {
            Ok(Sign::Negative)
        }
    }
}

impl Coefficient {
    /// `dst += self * src` on one scalar.
    #[inline]
    pub(crate) fn mul_add(&self, dst: &mut [i64], src: &[i64]) -> Result<()> {
        match self {
            Coefficient::Zero => Ok(()),
            Coefficient::Int(c) => {
                for (a, &b) in dst.iter_mut().zip(src) {
                    *a = b
                        .checked_mul(*c)
                        .and_then(|p| a.checked_add(p))
                        .ok_or(Error::Overflow)?;
                }
                Ok(())
            }
            Coefficient::Ring(table) => {
                let d = src.len();
                for (row, a) in dst.iter_mut().enumerate() {
                    let mut acc = *a;
                    for (t, &b) in src.iter().enumerate() {
                        let c = table[row * d + t];
                        if c != 0 && b != 0 {
                            acc = b
                                .checked_mul(c)
                                .and_then(|p| acc.checked_add(p))
                                .ok_or(Error::Overflow)?;
                        }
                    }
                    *a = acc;
                }
                Ok(())
            }
        }
    }
}
