//! Gröbner bases for submodules of free modules R^n and the syzygy
//! computations built on them. Syzygies are obtained by the augmented-module
//! elimination: run Buchberger on (f_i ⊕ e_i) under an order in which the
//! ambient block dominates the tag block; basis elements with zero ambient
//! part are the syzygies.

use super::{Budget, GbConfig};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Poly;
use crate::rat::{is_zero, Rat};
use std::cmp::Ordering;

/// Element of a free module R^rank.
#[derive(Debug, Clone, PartialEq)]
pub struct ModElem {
    pub comps: Vec<Poly>,
}

impl ModElem {
    pub fn zero(rank: usize) -> Self {
        ModElem {
            comps: vec![Poly::zero(); rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    /// Common degree of the element under position shifts, when homogeneous.
    pub fn degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()? as i64 + shifts[i];
            match deg {
                None => deg = Some(d),
                Some(existing) if existing == d => {}
                _ => return None,
            }
        }
        deg
    }
}

/// Order on module terms (monomial, position): positions below `split` form a
/// dominating block; inside a block terms compare by the base order, ties by
/// position (lower index larger).
#[derive(Debug, Clone, Copy)]
struct ModOrder {
    base: TermOrder,
    split: usize,
}

impl ModOrder {
    fn cmp(&self, a: &(Monomial, usize), b: &(Monomial, usize)) -> Ordering {
        let block_a = a.1 < self.split;
        let block_b = b.1 < self.split;
        match (block_a, block_b) {
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
        self.base
            .cmp(&a.0, &b.0)
            .then_with(|| b.1.cmp(&a.1))
    }
}

/// Engine representation: terms sorted descending under the module order.
type MTerms = Vec<(Monomial, usize, Rat)>;

fn mt_from_elem(e: &ModElem, order: ModOrder) -> MTerms {
    let mut t: MTerms = Vec::new();
    for (pos, c) in e.comps.iter().enumerate() {
        for (m, r) in c.terms() {
            t.push((*m, pos, r.clone()));
        }
    }
    t.sort_by(|a, b| order.cmp(&(b.0, b.1), &(a.0, a.1)));
    t
}

fn mt_to_elem(t: &MTerms, rank: usize) -> ModElem {
    let mut comps = vec![Vec::new(); rank];
    for (m, p, c) in t {
        comps[*p].push((*m, c.clone()));
    }
    ModElem {
        comps: comps.into_iter().map(Poly::from_terms).collect(),
    }
}

fn mt_primitive(t: MTerms) -> MTerms {
    if t.is_empty() {
        return t;
    }
    let refs: Vec<&Rat> = t.iter().map(|(_, _, c)| c).collect();
    let mut ct = crate::rat::content(&refs);
    if t[0].2 < Rat::from_integer(0.into()) {
        ct = -ct;
    }
    let inv = ct.recip();
    t.into_iter().map(|(m, p, c)| (m, p, c * &inv)).collect()
}

/// f - c * m * g under the module order.
fn mt_sub_scaled(f: &[(Monomial, usize, Rat)], g: &MTerms, m: &Monomial, c: &Rat, order: ModOrder) -> MTerms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < f.len() && j < g.len() {
        let gm = (g[j].0.mul(m), g[j].1);
        match order.cmp(&(f[i].0, f[i].1), &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.0, gm.1, -(c * &g[j].2)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &f[i].2 - c * &g[j].2;
                if !is_zero(&v) {
                    out.push((f[i].0, f[i].1, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push((g[j].0.mul(m), g[j].1, -(c * &g[j].2)));
        j += 1;
    }
    out
}

fn mt_normal_form(
    f: MTerms,
    basis: &[MTerms],
    order: ModOrder,
    budget: &mut Budget,
) -> Result<MTerms> {
    let mut rem = f;
    let mut cursor = 0usize;
    'outer: while cursor < rem.len() {
        let (m, p, c) = rem[cursor].clone();
        for g in basis {
            if g.is_empty() {
                continue;
            }
            let (gm, gp, gc) = &g[0];
            if *gp == p && gm.divides(&m) {
                budget.spend()?;
                let q = gm.div(&m).unwrap();
                let factor = &c / gc;
                let tail = mt_sub_scaled(&rem[cursor..], g, &q, &factor, order);
                rem.truncate(cursor);
                rem.extend(tail);
                continue 'outer;
            }
        }
        cursor += 1;
    }
    Ok(rem)
}

/// Fraction-free: lc_g·(lcm/lt_f)·f − lc_f·(lcm/lt_g)·g.
fn mt_spair(f: &MTerms, g: &MTerms, order: ModOrder) -> MTerms {
    debug_assert_eq!(f[0].1, g[0].1);
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.div(&lcm).unwrap();
    let mg = g[0].0.div(&lcm).unwrap();
    let scaled_f: MTerms = f
        .iter()
        .map(|(m, p, c)| (m.mul(&mf), *p, c * &g[0].2))
        .collect();
    mt_sub_scaled(&scaled_f, g, &mg, &f[0].2, order)
}

fn buchberger_module(gens: Vec<MTerms>, order: ModOrder, cfg: &GbConfig) -> Result<Vec<MTerms>> {
    let mut basis: Vec<MTerms> = gens.into_iter().filter(|g| !g.is_empty()).map(mt_primitive).collect();
    let mut budget = Budget::new(cfg);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            if basis[i][0].1 == basis[j][0].1 {
                pairs.push((j, i));
            }
        }
    }
    while !pairs.is_empty() {
        let mut best = 0usize;
        let mut best_deg = {
            let (i, j) = pairs[0];
            basis[i][0].0.lcm(&basis[j][0].0).total_degree()
        };
        for (idx, (i, j)) in pairs.iter().enumerate().skip(1) {
            let d = basis[*i][0].0.lcm(&basis[*j][0].0).total_degree();
            if d < best_deg {
                best = idx;
                best_deg = d;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        budget.spend()?;
        let s = mt_spair(&basis[i], &basis[j], order);
        let r = mt_normal_form(s, &basis, order, &mut budget)?;
        if !r.is_empty() {
            let r = mt_primitive(r);
            let pos = r[0].1;
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                if basis[k][0].1 == pos {
                    pairs.push((k, new));
                }
            }
        }
    }
    Ok(basis)
}

/// Reduced module basis: minimal leads, tails reduced, monic, sorted.
fn mt_reduce_basis(basis: Vec<MTerms>, order: ModOrder, cfg: &GbConfig) -> Result<Vec<MTerms>> {
    let mut budget = Budget::new(cfg);
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j][0].1 == basis[i][0].1
                && basis[j][0].0.divides(&basis[i][0].0)
                && !(basis[j][0].0 == basis[i][0].0 && j > i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MTerms> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| if k { Some(b) } else { None })
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MTerms> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, b)| if j != i { Some(b.clone()) } else { None })
            .collect();
        let r = mt_normal_form(minimal[i].clone(), &others, order, &mut budget)?;
        let lc = r[0].2.clone();
        reduced.push(
            r.into_iter()
                .map(|(m, p, c)| (m, p, c / &lc))
                .collect::<MTerms>(),
        );
    }
    reduced.sort_by(|a, b| {
        order
            .cmp(&(a[0].0, a[0].1), &(b[0].0, b[0].1))
    });
    Ok(reduced)
}

/// A reduced Gröbner basis of a submodule of R^rank (plain top order).
#[derive(Debug, Clone)]
pub struct ModGb {
    rank: usize,
    order: ModOrder,
    basis: Vec<MTerms>,
}

impl ModGb {
    pub fn elements(&self) -> Vec<ModElem> {
        self.basis.iter().map(|b| mt_to_elem(b, self.rank)).collect()
    }

    pub fn normal_form(&self, e: &ModElem) -> Result<ModElem> {
        let cfg = GbConfig::default();
        let mut budget = Budget::new(&cfg);
        let t = mt_normal_form(mt_from_elem(e, self.order), &self.basis, self.order, &mut budget)?;
        Ok(mt_to_elem(&t, self.rank))
    }

    pub fn contains(&self, e: &ModElem) -> Result<bool> {
        Ok(self.normal_form(e)?.is_zero())
    }
}

/// Reduced Gröbner basis of the submodule of R^rank generated by `gens`.
pub fn module_gb(gens: &[ModElem], rank: usize) -> Result<ModGb> {
    let order = ModOrder {
        base: TermOrder::Grevlex,
        split: rank,
    };
    let cfg = GbConfig::default();
    let raw = buchberger_module(gens.iter().map(|g| mt_from_elem(g, order)).collect(), order, &cfg)?;
    let reduced = if raw.is_empty() { raw } else { mt_reduce_basis(raw, order, &cfg)? };
    Ok(ModGb {
        rank,
        order,
        basis: reduced,
    })
}

/// Generating set of the syzygy module of `gens` ⊂ R^rank: every returned
/// tuple s satisfies Σ_i s_i · gens_i = 0, and the tuples generate all such
/// relations.
///
/// Cofactor-tracked Buchberger: each working element is an augmented vector
/// whose real block is closed under S-pairs while the tag block records its
/// expression in the input generators. S-pairs that reduce to zero in the
/// real block leave their tags behind, and those tags generate the syzygy
/// module; tag-lead pairs are never formed.
pub fn syzygies(gens: &[ModElem], rank: usize) -> Result<Vec<ModElem>> {
    let k = gens.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let order = ModOrder {
        base: TermOrder::Grevlex,
        split: rank,
    };
    let cfg = GbConfig::default();
    let mut budget = Budget::new(&cfg);
    let mut basis: Vec<MTerms> = Vec::with_capacity(k);
    let mut out: Vec<ModElem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g.rank(), rank, "generator rank mismatch");
        if g.is_zero() {
            let mut e = ModElem::zero(k);
            e.comps[i] = Poly::one();
            out.push(e);
            continue;
        }
        let mut comps = g.comps.clone();
        comps.resize(rank + k, Poly::zero());
        comps[rank + i] = Poly::one();
        basis.push(mt_from_elem(&ModElem { comps }, order));
    }
    let extract_tags = |t: &MTerms| -> ModElem {
        let shifted: MTerms = t
            .iter()
            .filter(|(_, p, _)| *p >= rank)
            .map(|(m, p, c)| (*m, p - rank, c.clone()))
            .collect();
        mt_to_elem(&shifted, k)
    };
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            if basis[i][0].1 == basis[j][0].1 {
                pairs.push((j, i));
            }
        }
    }
    while !pairs.is_empty() {
        let mut best = 0usize;
        let mut best_deg = {
            let (i, j) = pairs[0];
            basis[i][0].0.lcm(&basis[j][0].0).total_degree()
        };
        for (idx, (i, j)) in pairs.iter().enumerate().skip(1) {
            let d = basis[*i][0].0.lcm(&basis[*j][0].0).total_degree();
            if d < best_deg {
                best = idx;
                best_deg = d;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        budget.spend()?;
        if rank == 1 && basis[i][0].0.coprime(&basis[j][0].0) {
            // ideal case, coprime leads: the S-pair reduces to zero along its
            // product representation, and the associated syzygy is the Koszul
            // relation real(b_j)·tag(b_i) − real(b_i)·tag(b_j)
            let real = |t: &MTerms| -> Poly {
                Poly::from_terms(
                    t.iter()
                        .filter(|(_, p, _)| *p < rank)
                        .map(|(m, _, c)| (*m, c.clone()))
                        .collect(),
                )
            };
            let fi = real(&basis[i]);
            let fj = real(&basis[j]);
            let ti = extract_tags(&basis[i]);
            let tj = extract_tags(&basis[j]);
            let mut comps = Vec::with_capacity(k);
            for idx in 0..k {
                comps.push(fj.mul(&ti.comps[idx]).sub(&fi.mul(&tj.comps[idx])));
            }
            let e = ModElem { comps };
            if !e.is_zero() {
                out.push(e);
            }
            continue;
        }
        let s = mt_spair(&basis[i], &basis[j], order);
        let r = mt_normal_form_block(s, &basis, order, rank, &mut budget)?;
        if r.is_empty() {
            continue;
        }
        if r[0].1 >= rank {
            // pure tag vector: a syzygy of the inputs
            let syz = extract_tags(&r);
            if !syz.is_zero() {
                out.push(syz);
            }
            continue;
        }
        let r = mt_primitive(r);
        let pos = r[0].1;
        let new = basis.len();
        basis.push(r);
        for t in 0..new {
            if basis[t][0].1 == pos {
                pairs.push((t, new));
            }
        }
    }
    Ok(out)
}

/// Normal form that reduces only the real-block head of the vector: terms in
/// positions >= split are cofactor bookkeeping and are never reduced.
fn mt_normal_form_block(
    f: MTerms,
    basis: &[MTerms],
    order: ModOrder,
    split: usize,
    budget: &mut Budget,
) -> Result<MTerms> {
    let mut rem = f;
    let mut cursor = 0usize;
    let mut steps = 0usize;
    'outer: while cursor < rem.len() {
        let (m, p, c) = rem[cursor].clone();
        if p >= split {
            break; // only cofactor bookkeeping remains
        }
        for g in basis {
            if g.is_empty() {
                continue;
            }
            let (gm, gp, gc) = &g[0];
            if *gp == p && gm.divides(&m) {
                budget.spend()?;
                let q = gm.div(&m).unwrap();
                let factor = &c / gc;
                let tail = mt_sub_scaled(&rem[cursor..], g, &q, &factor, order);
                rem.truncate(cursor);
                rem.extend(tail);
                steps += 1;
                // syzygy vectors only matter up to scale: strip content
                if steps % 8 == 0 && !rem.is_empty() {
                    rem = mt_primitive(rem);
                }
                continue 'outer;
            }
        }
        cursor += 1;
    }
    Ok(rem)
}

/// Syzygies of a row of polynomials (ambient rank 1).
pub fn syzygies_of_polys(row: &[Poly]) -> Result<Vec<Vec<Poly>>> {
    let gens: Vec<ModElem> = row
        .iter()
        .map(|f| ModElem {
            comps: vec![f.clone()],
        })
        .collect();
    Ok(syzygies(&gens, 1)?.into_iter().map(|e| e.comps).collect())
}

/// Minimal generating set of a graded submodule. Graded Nakayama: a
/// generator of degree e is redundant iff it lies in the span of the
/// lower-degree generators plus a constant combination of the kept
/// equal-degree ones, so one normal form per element and Q-linear algebra per
/// degree suffice.
pub fn minimal_generators(gens: Vec<ModElem>, rank: usize) -> Result<Vec<ModElem>> {
    let shifts = vec![0i64; rank];
    minimal_generators_shifted(gens, rank, &shifts)
}

/// As `minimal_generators`, with position degree shifts.
pub fn minimal_generators_shifted(
    mut gens: Vec<ModElem>,
    rank: usize,
    shifts: &[i64],
) -> Result<Vec<ModElem>> {
    gens.retain(|g| !g.is_zero());
    let mut by_degree: std::collections::BTreeMap<i64, Vec<ModElem>> = Default::default();
    for g in gens {
        let d = g
            .degree(shifts)
            .ok_or_else(|| Error::invalid("minimal_generators: non-homogeneous generator"))?;
        by_degree.entry(d).or_default().push(g);
    }
    let mut kept: Vec<ModElem> = Vec::new();
    for (_, batch) in by_degree {
        let lower_gb = if kept.is_empty() {
            None
        } else {
            Some(module_gb(&kept, rank)?)
        };
        // residues modulo the lower-degree part; redundancy within the batch
        // is Q-linear dependence of the residues
        let mut residue_rows: Vec<Vec<crate::rat::Rat>> = Vec::new();
        let mut coords: std::collections::HashMap<(Monomial, usize), usize> = Default::default();
        for g in batch {
            let r = match &lower_gb {
                Some(gb) => gb.normal_form(&g)?,
                None => g.clone(),
            };
            if r.is_zero() {
                continue;
            }
            let mut row_entries = Vec::new();
            for (pos, comp) in r.comps.iter().enumerate() {
                for (m, c) in comp.terms() {
                    let next = coords.len();
                    let idx = *coords.entry((*m, pos)).or_insert(next);
                    row_entries.push((idx, c.clone()));
                }
            }
            let width = coords.len();
            for row in residue_rows.iter_mut() {
                row.resize(width, crate::rat::Rat::from_integer(0.into()));
            }
            let mut row = vec![crate::rat::Rat::from_integer(0.into()); width];
            for (idx, c) in row_entries {
                row[idx] = c;
            }
            let mut probe = residue_rows.clone();
            probe.push(row.clone());
            if crate::linalg::span_rank(probe) > crate::linalg::span_rank(residue_rows.clone()) {
                residue_rows.push(row);
                kept.push(g);
            }
        }
    }
    Ok(kept)
}

/// The spec-level syzygy module of a list of nonzero homogeneous polynomials.
#[derive(Debug, Clone)]
pub struct SyzygyModule {
    pub ambient_rank: usize,
    /// Degree shift of each position (degree of the source generator).
    pub shifts: Vec<i64>,
    pub generators: Vec<ModElem>,
}

pub fn syzygy_module(gens: &[Poly]) -> Result<SyzygyModule> {
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::invalid("syzygy_module: zero generator"));
    }
    let shifts: Vec<i64> = gens
        .iter()
        .map(|g| {
            g.homogeneous_degree()
                .map(|d| d as i64)
                .ok_or_else(|| Error::invalid("syzygy_module: non-homogeneous generator"))
        })
        .collect::<Result<_>>()?;
    let syz = syzygies_of_polys(gens)?;
    let generators: Vec<ModElem> = syz.into_iter().map(|comps| ModElem { comps }).collect();
    // contract: every generator contracts to zero against the source
    for s in &generators {
        let mut acc = Poly::zero();
        for (i, g) in gens.iter().enumerate() {
            acc = acc.add(&s.comps[i].mul(g));
        }
        assert!(acc.is_zero(), "syzygy contraction identity violated");
    }
    Ok(SyzygyModule {
        ambient_rank: gens.len(),
        shifts,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let syz = syzygy_module(&[p("x"), p("y")]).unwrap();
        assert_eq!(syz.generators.len(), 1);
        let s = &syz.generators[0];
        // spans the same module as (y, -x)
        let expect = ModElem {
            comps: vec![p("y"), p("-x")],
        };
        let gb = module_gb(&[s.clone()], 2).unwrap();
        assert!(gb.contains(&expect).unwrap());
    }

    #[test]
    fn twisted_cubic_has_two_linear_syzygies() {
        let gens = [p("y^2 - xz"), p("yz - xw"), p("z^2 - yw")];
        let syz = syzygy_module(&gens).unwrap();
        let min = minimal_generators(syz.generators.clone(), 3).unwrap();
        assert_eq!(min.len(), 2);
        for s in &min {
            for c in &s.comps {
                assert!(c.is_zero() || c.homogeneous_degree() == Some(1));
            }
        }
        // the known relations z(y²−xz) − y(yz−xw) + x(z²−yw) = 0 and
        // w(y²−xz) − z(yz−xw) + y(z²−yw) = 0 span the same module
        let known = [
            ModElem {
                comps: vec![p("z"), p("-y"), p("x")],
            },
            ModElem {
                comps: vec![p("w"), p("-z"), p("y")],
            },
        ];
        let gb = module_gb(&min, 3).unwrap();
        for k in &known {
            assert!(gb.contains(k).unwrap());
        }
        let gb2 = module_gb(&known.to_vec(), 3).unwrap();
        for s in &min {
            assert!(gb2.contains(s).unwrap());
        }
    }

    #[test]
    fn plane_cubic_union_line_truncation_syzygies() {
        // (I_C)_{<=3} = (h·h1, h·h2): only the Koszul syzygy, nothing linear
        let hh1 = p("w").mul(&p("x"));
        let hh2 = p("w").mul(&p("y"));
        let syz = syzygy_module(&[hh1.clone(), hh2.clone()]).unwrap();
        let min = minimal_generators(syz.generators.clone(), 2).unwrap();
        assert_eq!(min.len(), 1);
        let s = &min[0];
        // Koszul: degree-1 entries (x, -y)-type since the common factor w cancels
        assert_eq!(s.comps[0].homogeneous_degree(), Some(1));
        let mut acc = s.comps[0].mul(&hh1);
        acc = acc.add(&s.comps[1].mul(&hh2));
        assert!(acc.is_zero());
    }

    #[test]
    fn zero_generator_gets_trivial_syzygy() {
        let syz = syzygies_of_polys(&[p("x"), Poly::zero()]).unwrap();
        assert!(syz
            .iter()
            .any(|s| s[0].is_zero() && !s[1].is_zero()));
    }
}
