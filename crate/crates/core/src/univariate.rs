//! Dense univariate polynomials over `Q`, coefficients in ascending order.
//! Only what binary-form gcds and interpolation need.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rat::Rat;

pub(crate) fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub(crate) fn degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Integer polynomial with the same roots, with coprime coefficients.
fn primitive(p: &[Rat]) -> Vec<BigInt> {
    let den = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    primitive_part(ints)
}

fn primitive_part(p: Vec<BigInt>) -> Vec<BigInt> {
    let content = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() || content.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

fn int_degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// `lc(b)^(deg a - deg b + 1) a mod b`, over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_degree(b).expect("division by zero polynomial");
    let lead = &b[db];
    let mut r = a.to_vec();
    while let Some(dr) = int_degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lead;
        }
        for (i, bc) in b[..=db].iter().enumerate() {
            r[dr - db + i] -= &c * bc;
        }
        r.truncate(dr);
    }
    r
}

/// Monic gcd; `gcd(0, 0) = 0`. Uses the primitive remainder sequence.
pub(crate) fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = primitive(&trim(a.to_vec()));
    let mut y = primitive(&trim(b.to_vec()));
    while int_degree(&y).is_some() {
        let r = primitive_part(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    let Some(d) = int_degree(&x) else { return Vec::new() };
    let lead = Rat::from_integer(x[d].clone());
    x.truncate(d + 1);
    x.into_iter().map(|c| Rat::from_integer(c) / &lead).collect()
}

/// Exact quotient `a / b`; the caller guarantees divisibility.
pub(crate) fn div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else { return Vec::new() };
    if da < db {
        return Vec::new();
    }
    let mut q = vec![Rat::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &b[db];
        for (i, bc) in b[..=db].iter().enumerate() {
            r[dr - db + i] -= &c * bc;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    debug_assert!(r.is_empty(), "inexact division");
    trim(q)
}

/// Coefficients of the unique polynomial of degree < `xs.len()` through the
/// points `(xs[i], ys[i])`, via Newton divided differences.
pub(crate) fn interpolate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - k]);
        }
    }
    // Horner expansion of the Newton form.
    let mut poly = vec![Rat::zero(); n];
    for k in (0..n).rev() {
        // poly = poly * (x - xs[k]) + dd[k]
        let mut next = vec![Rat::zero(); n];
        for i in 0..n {
            if poly[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += &poly[i];
            }
            next[i] -= &poly[i] * &xs[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    trim(poly)
}

#[cfg(test)]
pub(crate) fn eval(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}
