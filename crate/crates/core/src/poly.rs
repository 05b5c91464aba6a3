//! Sparse multivariate polynomials over Q in x, y, z, w. Terms are kept in
//! canonical form: strictly descending grevlex, no zero coefficients.

use crate::monomial::{Monomial, TermOrder, NVARS};
use crate::rat::{content, is_zero, render_rat, Rat};
use num_traits::{One, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    /// Descending grevlex; invariant: no zero coefficients, no duplicates.
    terms: Vec<(Monomial, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if is_zero(&c) {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(i: usize) -> Self {
        Poly {
            terms: vec![(Monomial::var(i), Rat::one())],
        }
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        if is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, Rat)>) -> Self {
        terms.sort_by(|a, b| TermOrder::Grevlex.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if is_zero(&last.1) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !is_zero(&c) {
                out.push((m, c));
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Common total degree of all terms, when uniform (None for zero or mixed).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.first()?.0.total_degree();
        if self.terms.iter().all(|(m, _)| m.total_degree() == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match TermOrder::Grevlex.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut acc: Vec<(Monomial, Rat)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, k) in &other.terms {
                acc.push((m.mul(n), c * k));
            }
        }
        Poly::from_terms(acc)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Poly {
        assert!(var < NVARS);
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e > 0 {
                let mut exps = m.exps;
                exps[var] = e - 1;
                out.push((Monomial::new(exps), c * Rat::from_integer(e.into())));
            }
        }
        Poly::from_terms(out)
    }

    /// Evaluates at a rational point of C^4.
    pub fn eval(&self, pt: &[Rat; NVARS]) -> Rat {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..NVARS {
                for _ in 0..m.exps[i] {
                    v *= &pt[i];
                }
            }
            total += v;
        }
        total
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: TermOrder) -> Option<(&Monomial, &Rat)> {
        match order {
            TermOrder::Grevlex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    /// Positive rational content: `self / content` has coprime integer
    /// coefficients with positive leading coefficient under grevlex.
    pub fn primitive_scale(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let refs: Vec<&Rat> = self.terms.iter().map(|(_, c)| c).collect();
        let mut ct = content(&refs);
        if self.terms[0].1 < Rat::zero() {
            ct = -ct;
        }
        self.scale(&ct.recip())
    }

    /// Monic under the given order.
    pub fn monic(&self, order: TermOrder) -> Poly {
        match self.leading_term(order) {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.clone().recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact division: returns `self / g` when g divides self, else None.
    pub fn div_exact(&self, g: &Poly) -> Option<Poly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (gm, gc) = (g.terms[0].0, g.terms[0].1.clone());
        while !rem.is_zero() {
            let (rm, rc) = (rem.terms[0].0, rem.terms[0].1.clone());
            let m = gm.div(&rm)?;
            let c = rc / &gc;
            quot = quot.add(&Poly::monomial(m, c.clone()));
            rem = rem.sub(&g.mul_term(&m, &c));
        }
        Some(quot)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                s.push_str(&render_rat(&abs));
            } else if coeff_is_one {
                s.push_str(&m.render());
            } else {
                s.push_str(&render_rat(&abs));
                s.push('*');
                s.push_str(&m.render());
            }
        }
        s
    }
}

/// Σ x_i * f_i — the Euler pairing of a coefficient quadruple with the radial
/// field; ubiquitous in descent checks.
pub fn radial_pairing(coeffs: &[Poly; NVARS]) -> Poly {
    let mut acc = Poly::zero();
    for (i, f) in coeffs.iter().enumerate() {
        acc = acc.add(&f.mul(&Poly::var(i)));
    }
    acc
}
