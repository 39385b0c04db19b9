//! Sparse polynomials over `Q` in a fixed, named variable set.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order is
//! lexicographic with the first variable most significant. Display walks the
//! map in reverse, giving the descending order `X1 > Y1 > X2 > Y2` (and
//! `X > Y > Z`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{falling, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    /// `[X, Y]`
    Binary,
    /// `[X1, Y1, X2, Y2]`
    Bi,
    /// `[X, Y, Z]`
    Ternary,
}

impl Ring {
    pub fn vars(self) -> &'static [&'static str] {
        match self {
            Ring::Binary => &["X", "Y"],
            Ring::Bi => &["X1", "Y1", "X2", "Y2"],
            Ring::Ternary => &["X", "Y", "Z"],
        }
    }

    pub fn arity(self) -> usize {
        self.vars().len()
    }

    pub fn var_index(self, name: &str) -> Option<usize> {
        self.vars().iter().position(|v| *v == name)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.vars().join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    ring: Ring,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(ring: Ring) -> Self {
        MPoly { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: Rat) -> Self {
        Self::monomial(ring, vec![0; ring.arity()], c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rat::one())
    }

    /// The variable with index `i` in `ring`.
    pub fn var(ring: Ring, i: usize) -> Self {
        let mut e = vec![0; ring.arity()];
        e[i] = 1;
        Self::monomial(ring, e, Rat::one())
    }

    pub fn monomial(ring: Ring, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), ring.arity(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { ring, terms }
    }

    /// Sums the given terms; repeated exponents accumulate and zeros are dropped.
    pub fn from_terms<I>(ring: Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = MPoly::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.arity(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree of the exponents restricted to the variable range `vars`,
    /// if all terms agree on it. `None` for the zero polynomial or on disagreement.
    pub fn homogeneous_degree_in(&self, vars: std::ops::Range<usize>) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e[vars.clone()].iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_in(&self, vars: std::ops::Range<usize>, d: u32) -> bool {
        self.terms.keys().all(|e| e[vars.clone()].iter().sum::<u32>() == d)
    }

    fn check_ring(&self, other: &MPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let mut out = MPoly::zero(self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.ring);
        }
        MPoly { ring: self.ring, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `order`-th partial derivative in variable `var`.
    pub fn differentiate(&self, var: usize, order: u32) -> MPoly {
        let mut orders = vec![0; self.ring.arity()];
        orders[var] = order;
        self.partial(&orders)
    }

    /// Mixed partial derivative, `orders[i]` times in variable `i`.
    pub fn partial(&self, orders: &[u32]) -> MPoly {
        assert_eq!(orders.len(), self.ring.arity(), "derivative multi-index length");
        let mut out = MPoly::zero(self.ring);
        'terms: for (e, c) in &self.terms {
            let mut factor = num_bigint::BigInt::one();
            let mut ne = e.clone();
            for (i, &k) in orders.iter().enumerate() {
                if e[i] < k {
                    continue 'terms;
                }
                factor *= falling(e[i], k);
                ne[i] -= k;
            }
            out.add_term(ne, c * Rat::from_integer(factor));
        }
        out
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), got: point.len() });
        }
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= crate::rat::pow(x, k);
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces variable `i` by `images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), got: images.len() });
        }
        let target = images.first().map(|p| p.ring).unwrap_or(self.ring);
        for im in images {
            if im.ring != target {
                return Err(Error::RingMismatch(target, im.ring));
            }
        }
        // Powers of each image, computed once up to the maximal exponent needed.
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(p.ring)]).collect();
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
            }
        }
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Moves the polynomial to another ring, sending variable `i` to variable
    /// `map[i]` of `target`.
    pub fn rename(&self, target: Ring, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.ring.arity(), "variable map length");
        MPoly::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut ne = vec![0; target.arity()];
                for (i, &k) in e.iter().enumerate() {
                    ne[map[i]] += k;
                }
                (ne, c.clone())
            }),
        )
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_add(&-rhs).expect("ring mismatch in -")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.multiply(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { ring: self.ring, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ring.vars();
        for (n, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{}", names[i], k) })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
