//! Buchberger engine for ideals of Q[x,y,z,w]: reduced bases, normal forms,
//! ideal arithmetic (sum, product, intersection, quotient, saturation,
//! elimination) and the gcd built on principal-ideal intersection.

pub mod hilbert;
pub mod module;
pub mod resolution;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder, NVARS};
use crate::poly::Poly;
use crate::rat::{is_zero, Rat};
use std::sync::OnceLock;

/// Reduction-step budget. The engine aborts with a resource error past this;
/// override with the CODIM1_MAX_GB_STEPS environment variable.
#[derive(Debug, Clone, Copy)]
pub struct GbConfig {
    pub max_steps: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        static LIMIT: OnceLock<usize> = OnceLock::new();
        let max = *LIMIT.get_or_init(|| {
            std::env::var("CODIM1_MAX_GB_STEPS")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(4_000_000)
        });
        GbConfig { max_steps: max }
    }
}

struct Budget {
    left: usize,
}

impl Budget {
    fn new(cfg: &GbConfig) -> Self {
        Budget { left: cfg.max_steps }
    }

    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::Resource(
                "Gröbner step limit exceeded (set CODIM1_MAX_GB_STEPS to raise)".into(),
            ));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Engine-internal polynomial: terms sorted descending under the active order.
type OTerms = Vec<(Monomial, Rat)>;

fn to_oterms(p: &Poly, order: TermOrder) -> OTerms {
    let mut t: OTerms = p.terms().to_vec();
    if order != TermOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

fn to_poly(t: OTerms) -> Poly {
    Poly::from_terms(t)
}

/// f - c * m * g, both sorted under `order`.
fn sub_scaled(f: &[(Monomial, Rat)], g: &OTerms, m: &Monomial, c: &Rat, order: TermOrder) -> OTerms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < f.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match order.cmp(&f[i].0, &gm) {
            std::cmp::Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &f[i].1 - c * &g[j].1;
                if !is_zero(&v) {
                    out.push((f[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push((g[j].0.mul(m), -(c * &g[j].1)));
        j += 1;
    }
    out
}

fn primitive_oterms(t: OTerms) -> OTerms {
    if t.is_empty() {
        return t;
    }
    let refs: Vec<&Rat> = t.iter().map(|(_, c)| c).collect();
    let mut ct = crate::rat::content(&refs);
    if t[0].1 < Rat::from_integer(0.into()) {
        ct = -ct;
    }
    let inv = ct.recip();
    t.into_iter().map(|(m, c)| (m, c * &inv)).collect()
}

/// Full normal form of `f` against `basis` (every term reduced). With
/// `allow_scaling` the remainder is content-stripped as it goes — the result
/// is then only correct up to a positive scalar, which is all the Buchberger
/// loop needs, and it keeps rational coefficients from exploding.
fn normal_form_terms_impl(
    f: OTerms,
    basis: &[OTerms],
    order: TermOrder,
    budget: &mut Budget,
    allow_scaling: bool,
) -> Result<OTerms> {
    let mut rem = f;
    let mut cursor = 0usize;
    let mut steps = 0usize;
    'outer: while cursor < rem.len() {
        let (m, c) = rem[cursor].clone();
        for g in basis {
            if g.is_empty() {
                continue;
            }
            if g[0].0.divides(&m) {
                budget.spend()?;
                let q = g[0].0.div(&m).unwrap();
                let factor = &c / &g[0].1;
                let tail = sub_scaled(&rem[cursor..], g, &q, &factor, order);
                rem.truncate(cursor);
                rem.extend(tail);
                if allow_scaling {
                    steps += 1;
                    if steps % 8 == 0 && !rem.is_empty() {
                        rem = primitive_oterms(rem);
                    }
                }
                continue 'outer;
            }
        }
        cursor += 1;
    }
    Ok(rem)
}

fn normal_form_terms(
    f: OTerms,
    basis: &[OTerms],
    order: TermOrder,
    budget: &mut Budget,
) -> Result<OTerms> {
    normal_form_terms_impl(f, basis, order, budget, false)
}

/// Fraction-free S-polynomial lc_g·(lcm/lt_f)·f − lc_f·(lcm/lt_g)·g.
fn spoly(f: &OTerms, g: &OTerms, order: TermOrder) -> OTerms {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.div(&lcm).unwrap();
    let mg = g[0].0.div(&lcm).unwrap();
    let scaled_f: OTerms = f.iter().map(|(m, c)| (m.mul(&mf), c * &g[0].1)).collect();
    sub_scaled(&scaled_f, g, &mg, &f[0].1, order)
}

/// Raw Buchberger loop with the product criterion and normal pair selection
/// (minimal lcm degree first, ties by the term order, then index).
fn buchberger(gens: &[Poly], order: TermOrder, cfg: &GbConfig) -> Result<Vec<OTerms>> {
    let mut basis: Vec<OTerms> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| primitive_oterms(to_oterms(p, order)))
        .collect();
    let mut budget = Budget::new(cfg);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal selection strategy
        let mut best = 0usize;
        let mut best_lcm = basis[pairs[0].0][0].0.lcm(&basis[pairs[0].1][0].0);
        for (idx, (i, j)) in pairs.iter().enumerate().skip(1) {
            let lcm = basis[*i][0].0.lcm(&basis[*j][0].0);
            let better = match best_lcm.total_degree().cmp(&lcm.total_degree()) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => order.cmp(&lcm, &best_lcm) == std::cmp::Ordering::Less,
            };
            if better {
                best = idx;
                best_lcm = lcm;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        if basis[i][0].0.coprime(&basis[j][0].0) {
            continue; // product criterion
        }
        budget.spend()?;
        let s = spoly(&basis[i], &basis[j], order);
        let r = normal_form_terms_impl(s, &basis, order, &mut budget, true)?;
        if !r.is_empty() {
            let r = primitive_oterms(r);
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }
    Ok(basis)
}

/// Reduced basis: minimal lead terms, fully tail-reduced, monic, sorted by
/// ascending lead term. Deterministic for fixed input and order.
fn reduce_basis(mut basis: Vec<OTerms>, order: TermOrder, cfg: &GbConfig) -> Result<Vec<OTerms>> {
    let mut budget = Budget::new(cfg);
    // minimalize: drop elements whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j][0].0.divides(&basis[i][0].0)
                && !(basis[j][0].0 == basis[i][0].0 && j > i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<OTerms> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(b, k)| if k { Some(b) } else { None })
        .collect();
    // tail-reduce each against the others
    let mut reduced: Vec<OTerms> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<OTerms> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, b)| if j != i { Some(b.clone()) } else { None })
            .collect();
        let r = normal_form_terms(minimal[i].clone(), &others, order, &mut budget)?;
        let lc = r[0].1.clone();
        reduced.push(r.into_iter().map(|(m, c)| (m, c / &lc)).collect());
    }
    reduced.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    Ok(reduced)
}

/// A reduced Gröbner basis together with its order.
#[derive(Debug, Clone)]
pub struct Gb {
    pub order: TermOrder,
    pub basis: Vec<Poly>,
}

impl Gb {
    fn oterms(&self) -> Vec<OTerms> {
        self.basis.iter().map(|p| to_oterms(p, self.order)).collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let cfg = GbConfig::default();
        let mut budget = Budget::new(&cfg);
        let t = normal_form_terms(to_oterms(f, self.order), &self.oterms(), self.order, &mut budget)
            .expect("normal form within budget");
        to_poly(t)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| *p.leading_term(self.order).expect("nonzero basis element").0)
            .collect()
    }

    /// Buchberger criterion: every S-polynomial reduces to zero. Used by the
    /// test suites to certify cached bases.
    pub fn verify_buchberger(&self) -> bool {
        let cfg = GbConfig::default();
        let ot = self.oterms();
        let mut budget = Budget::new(&cfg);
        for i in 0..ot.len() {
            for j in 0..i {
                let s = spoly(&ot[i], &ot[j], self.order);
                match normal_form_terms(s, &ot, self.order, &mut budget) {
                    Ok(r) => {
                        if !r.is_empty() {
                            return false;
                        }
                    }
                    Err(_) => return false,
                }
            }
        }
        true
    }
}

pub fn groebner_basis(gens: &[Poly], order: TermOrder) -> Result<Gb> {
    let cfg = GbConfig::default();
    let raw = buchberger(gens, order, &cfg)?;
    if raw.is_empty() {
        return Ok(Gb {
            order,
            basis: vec![],
        });
    }
    let reduced = reduce_basis(raw, order, &cfg)?;
    Ok(Gb {
        order,
        basis: reduced.into_iter().map(to_poly).collect(),
    })
}

/// An ideal with a write-once cached grevlex basis. Immutable and shareable.
#[derive(Debug)]
pub struct Ideal {
    gens: Vec<Poly>,
    cache: OnceLock<std::result::Result<Gb, Error>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            gens: self.gens.clone(),
            cache: OnceLock::new(),
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        match (self.gb(), other.gb()) {
            (Ok(a), Ok(b)) => a.basis == b.basis,
            _ => false,
        }
    }
}

impl Ideal {
    pub fn new(gens: Vec<Poly>) -> Self {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            gens,
            cache: OnceLock::new(),
        }
    }

    pub fn unit() -> Self {
        Ideal::new(vec![Poly::one()])
    }

    pub fn zero() -> Self {
        Ideal::new(vec![])
    }

    pub fn irrelevant() -> Self {
        Ideal::new((0..NVARS).map(Poly::var).collect())
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The cached reduced grevlex basis, computed on first use.
    pub fn gb(&self) -> Result<&Gb> {
        self.cache
            .get_or_init(|| groebner_basis(&self.gens, TermOrder::Grevlex))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// The same ideal with its reduced basis as the generating set. Ideal
    /// arithmetic multiplies generator counts fast; interreducing after each
    /// operation keeps the chains flat.
    pub fn simplified(&self) -> Result<Ideal> {
        let gb = self.gb()?.clone();
        let ideal = Ideal::new(gb.basis.clone());
        let _ = ideal.cache.set(Ok(gb));
        Ok(ideal)
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        Ok(self.gb()?.normal_form(f))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.contains(&Poly::one())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(other.gens());
        Ideal::new(gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in other.gens() {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(gens)
    }

    /// I ∩ J via syzygies of the concatenated generators: every relation
    /// Σ a_i f_i + Σ b_j g_j = 0 contributes Σ a_i f_i.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero());
        }
        let mut row: Vec<Poly> = self.gens.clone();
        row.extend_from_slice(other.gens());
        let syz = module::syzygies_of_polys(&row)?;
        let mut gens = Vec::new();
        for s in syz {
            let mut u = Poly::zero();
            for (i, f) in self.gens.iter().enumerate() {
                u = u.add(&s[i].mul(f));
            }
            if !u.is_zero() {
                gens.push(u.primitive_scale());
            }
        }
        Ideal::new(gens).simplified()
    }

    /// (I : g) = (I ∩ (g)) / g.
    pub fn quotient_by_poly(&self, g: &Poly) -> Result<Ideal> {
        if g.is_zero() {
            return Ok(Ideal::unit());
        }
        let inter = self.intersection(&Ideal::new(vec![g.clone()]))?;
        let gens = inter
            .gens()
            .iter()
            .map(|u| {
                u.div_exact(g)
                    .expect("intersection with (g) consists of multiples of g")
            })
            .collect();
        Ideal::new(gens).simplified()
    }

    /// (I : J) = ∩_j (I : g_j).
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for g in other.gens() {
            let q = self.quotient_by_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(Ideal::unit))
    }

    /// (I : J^∞) by iterating the quotient until it stabilizes; stabilization
    /// is tested by double inclusion via normal forms. Saturation with
    /// respect to the irrelevant ideal takes the one-shot reverse-lex route.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        if other.equals(&Ideal::irrelevant())? {
            return self.saturation_irrelevant();
        }
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// (I : x_i^∞): for a homogeneous ideal, dividing the maximal power of
    /// x_i out of each element of a reduced basis that sorts x_i last yields
    /// a basis of the saturation.
    pub fn saturation_by_variable(&self, i: usize) -> Result<Ideal> {
        if self.is_zero_ideal() {
            return Ok(Ideal::zero());
        }
        let gb = groebner_basis(&self.gens, TermOrder::GrevlexVarLast(i))?;
        let gens: Vec<Poly> = gb
            .basis
            .into_iter()
            .map(|g| {
                let a = g.terms().iter().map(|(m, _)| m.exps[i]).min().unwrap_or(0);
                if a == 0 {
                    g
                } else {
                    let divisor = Poly::var(i).pow(a);
                    g.div_exact(&divisor).expect("minimal power divides")
                }
            })
            .collect();
        Ideal::new(gens).simplified()
    }

    /// (I : (x,y,z,w)^∞) = ∩_i (I : x_i^∞): a polynomial is killed by a
    /// power of the irrelevant ideal exactly when it is killed by a power of
    /// each variable. Saturations that add nothing are skipped before
    /// intersecting.
    pub fn saturation_irrelevant(&self) -> Result<Ideal> {
        if self.is_zero_ideal() {
            return Ok(Ideal::zero());
        }
        let mut acc: Option<Ideal> = None;
        for i in 0..NVARS {
            let s = self.saturation_by_variable(i)?;
            acc = Some(match acc {
                None => s,
                Some(a) => {
                    if s.is_unit()? {
                        a
                    } else if a.is_unit()? {
                        s
                    } else if s.contains_ideal(&a)? {
                        a
                    } else {
                        a.intersection(&s)?
                    }
                }
            });
        }
        acc.unwrap().simplified()
    }

    /// Generators of I ∩ Q[kept vars], computed with a block order.
    pub fn eliminate(&self, drop_vars: [bool; NVARS]) -> Result<Ideal> {
        if !drop_vars.iter().any(|b| *b) {
            return Err(Error::invalid("eliminate: empty variable set"));
        }
        let gb = groebner_basis(&self.gens, TermOrder::Elim(drop_vars))?;
        let gens = gb
            .basis
            .into_iter()
            .filter(|p| {
                p.terms()
                    .iter()
                    .all(|(m, _)| (0..NVARS).all(|i| !drop_vars[i] || m.exps[i] == 0))
            })
            .collect();
        Ok(Ideal::new(gens))
    }

    /// Q-dimension of the degree-t graded piece of the ideal.
    pub fn degree_piece_dim(&self, t: u32) -> usize {
        degree_piece_dim(&self.gens, t)
    }
}

/// Q-dimension of the degree-t piece of the ideal generated by `gens`,
/// computed by rank over the monomial basis (no Gröbner machinery).
pub fn degree_piece_dim(gens: &[Poly], t: u32) -> usize {
    use crate::monomial::monomials_of_degree;
    let monos = monomials_of_degree(t);
    let index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let Some(d) = g.homogeneous_degree() else {
            continue;
        };
        if d > t {
            continue;
        }
        for m in monomials_of_degree(t - d) {
            let prod = g.mul_term(&m, &Rat::from_integer(1.into()));
            let mut row = vec![Rat::from_integer(0.into()); monos.len()];
            for (mm, c) in prod.terms() {
                row[index[mm]] = c.clone();
            }
            rows.push(row);
        }
    }
    crate::linalg::span_rank(rows)
}

/// gcd of a family via lcm-through-intersection: the reduced basis of
/// (f) ∩ (g) is the single monic lcm, and gcd = f·g / lcm.
pub fn multivariate_gcd(fs: &[Poly]) -> Result<Poly> {
    let nonzero: Vec<&Poly> = fs.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::invalid("gcd of all-zero inputs"));
    }
    let mut acc = nonzero[0].clone();
    for f in &nonzero[1..] {
        acc = gcd_pair(&acc, f)?;
        if acc.num_terms() == 1 && acc.terms()[0].0.is_one() {
            break; // gcd is already a unit
        }
    }
    Ok(acc.monic(TermOrder::Grevlex))
}

fn gcd_pair(f: &Poly, g: &Poly) -> Result<Poly> {
    let inter = Ideal::new(vec![f.clone()]).intersection(&Ideal::new(vec![g.clone()]))?;
    let gb = inter.gb()?;
    assert_eq!(
        gb.basis.len(),
        1,
        "intersection of principal ideals is principal"
    );
    let lcm = &gb.basis[0];
    let prod = f.mul(g);
    let gcd = prod
        .div_exact(lcm)
        .expect("lcm divides the product of the pair");
    Ok(gcd.primitive_scale())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn gb_of_duplicate_generator() {
        let i = ideal(&["x", "x"]);
        let gb = i.gb().unwrap();
        assert_eq!(gb.basis, vec![p("x")]);
    }

    #[test]
    fn twisted_cubic_is_its_own_basis() {
        let i = ideal(&["y^2 - xz", "yz - xw", "z^2 - yw"]);
        let gb = i.gb().unwrap();
        assert_eq!(gb.basis.len(), 3);
        let expect = [p("y^2 - xz"), p("yz - xw"), p("z^2 - yw")];
        for e in &expect {
            assert!(gb.basis.contains(e), "missing {}", e.render());
        }
        assert!(gb.verify_buchberger());
    }

    #[test]
    fn principal_ideal_unchanged() {
        let i = ideal(&["x^2*y - z^3"]);
        assert_eq!(i.gb().unwrap().basis, vec![p("x^2*y - z^3")]);
    }

    #[test]
    fn normal_form_examples() {
        let tc = ideal(&["y^2 - xz", "yz - xw", "z^2 - yw"]);
        assert!(tc.normal_form(&p("y^2 - xz")).unwrap().is_zero());
        let j = ideal(&["y"]);
        assert_eq!(j.normal_form(&p("x")).unwrap(), p("x"));
        // the double line from the linear-field classification
        let dl = ideal(&["y^2", "yw", "w^2", "yz - xw"]);
        assert!(dl.normal_form(&p("yz - xw")).unwrap().is_zero());
    }

    #[test]
    fn nf_idempotent() {
        let i = ideal(&["y^2 - xz", "yz - xw", "z^2 - yw"]);
        let f = p("x^3 + y^3 + z^3 + xyw");
        let nf = i.normal_form(&f).unwrap();
        assert_eq!(i.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let i = ideal(&["x"]).intersection(&ideal(&["y"])).unwrap();
        assert!(i.equals(&ideal(&["xy"])).unwrap());
    }

    #[test]
    fn saturation_strips_point_supported_component() {
        // sat(x·(x,y,z,w), (x,y,z,w)) = (x)
        let i = ideal(&["x^2", "xy", "xz", "xw"]);
        let s = i.saturation(&Ideal::irrelevant()).unwrap();
        assert!(s.equals(&ideal(&["x"])).unwrap());
        // idempotent
        let s2 = s.saturation(&Ideal::irrelevant()).unwrap();
        assert!(s2.equals(&s).unwrap());
    }

    #[test]
    fn saturation_keeps_embedded_line() {
        // (x^2, xy) = (x) ∩ (x^2, y): the embedded component lies along the
        // line {x = y = 0}, which meets Proj, so the ideal is saturated.
        let i = ideal(&["x^2", "xy"]);
        let s = i.saturation(&Ideal::irrelevant()).unwrap();
        assert!(s.equals(&i).unwrap());
        assert!(!s.contains(&p("x")).unwrap());
    }

    #[test]
    fn quotient_duality_for_coprime() {
        let f = p("x^2 + yw");
        let g = p("z");
        let fg = Ideal::new(vec![f.mul(&g)]);
        let q = fg.quotient_by_poly(&f).unwrap();
        assert!(q.equals(&Ideal::new(vec![g.clone()])).unwrap());
    }

    #[test]
    fn instanton_curve_intersection() {
        // (z^2-yw, yz-xw, y^2-xz) ∩ (x,w): twisted cubic ⊔ line
        let tc = ideal(&["z^2 - yw", "yz - xw", "y^2 - xz"]);
        let line = ideal(&["x", "w"]);
        let c = tc.intersection(&line).unwrap();
        // degree-4 genus-(-1) curve: verified via Hilbert data elsewhere; here
        // check membership both ways on generators
        for g in c.gens() {
            assert!(tc.contains(g).unwrap());
            assert!(line.contains(g).unwrap());
        }
        assert!(!c.contains(&p("x")).unwrap());
        let gb = c.gb().unwrap();
        assert!(gb.verify_buchberger());
    }

    #[test]
    fn eliminate_projects() {
        // eliminate x from (x - y^2, x - zw): y^2 - zw survives
        let i = ideal(&["x - y^2", "x - zw"]);
        let e = i.eliminate([true, false, false, false]).unwrap();
        assert!(e.contains(&p("y^2 - zw")).unwrap());
        for g in e.gens() {
            assert!(g.terms().iter().all(|(m, _)| m.exps[0] == 0));
        }
        assert!(ideal(&["x"]).eliminate([false; 4]).is_err());
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 y, x y^2) = xy
        let g = multivariate_gcd(&[p("x^2*y"), p("x*y^2")]).unwrap();
        assert_eq!(g, p("xy"));
        // gcd(x(z^2-xy), x(w^2-yz)) = x
        let g2 = multivariate_gcd(&[
            p("x").mul(&p("z^2 - xy")),
            p("x").mul(&p("w^2 - yz")),
        ])
        .unwrap();
        assert_eq!(g2, p("x"));
        // gcd divides inputs exactly
        let f1 = p("x^2 - y^2").mul(&p("z + w"));
        let f2 = p("x + y").mul(&p("z^2 + w^2"));
        let g3 = multivariate_gcd(&[f1.clone(), f2.clone()]).unwrap();
        assert!(f1.div_exact(&g3).is_some());
        assert!(f2.div_exact(&g3).is_some());
        assert!(multivariate_gcd(&[Poly::zero()]).is_err());
    }

    #[test]
    fn degree_piece_dims() {
        let i = ideal(&["x", "y"]);
        assert_eq!(i.degree_piece_dim(1), 2);
        assert_eq!(i.degree_piece_dim(2), 7); // 10 - 3 monomials in z,w
    }
}
