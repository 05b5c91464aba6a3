//! Monomials in the fixed ring Q[x, y, z, w] and the term orders used by the
//! Gröbner engine.

use std::cmp::Ordering;

pub const NVARS: usize = 4;
pub const VAR_NAMES: [&str; NVARS] = ["x", "y", "z", "w"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u32; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; NVARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = [0; NVARS];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn new(exps: [u32; NVARS]) -> Self {
        Monomial { exps }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// other / self, when divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            if self.exps[i] > other.exps[i] {
                return None;
            }
            exps[i] = other.exps[i] - self.exps[i];
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i].min(other.exps[i]);
        }
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn render(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..NVARS {
            match self.exps[i] {
                0 => {}
                1 => parts.push(VAR_NAMES[i].to_string()),
                e => parts.push(format!("{}^{}", VAR_NAMES[i], e)),
            }
        }
        parts.join("*")
    }
}

/// Total orders on monomials compatible with multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    /// Graded reverse lexicographic with x > y > z > w. The default everywhere.
    Grevlex,
    Lex,
    /// Block order eliminating the masked variables: masked block compared by
    /// grevlex first, then the rest. Leading terms free of masked variables
    /// certify membership in the elimination subring.
    Elim([bool; NVARS]),
    /// Weighted degree, ties broken by grevlex.
    Weighted([i64; NVARS]),
    /// Grevlex with the given variable moved to the last position: dividing
    /// variable powers out of such a basis saturates with respect to it.
    GrevlexVarLast(usize),
}

fn grevlex_cmp(a: &[u32; NVARS], b: &[u32; NVARS]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..NVARS).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            // smaller exponent in the latest differing variable is larger
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u32; NVARS], b: &[u32; NVARS]) -> Ordering {
    for i in 0..NVARS {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Grevlex => grevlex_cmp(&a.exps, &b.exps),
            TermOrder::Lex => lex_cmp(&a.exps, &b.exps),
            TermOrder::Elim(mask) => {
                let mut ea = [0u32; NVARS];
                let mut eb = [0u32; NVARS];
                let mut ra = [0u32; NVARS];
                let mut rb = [0u32; NVARS];
                for i in 0..NVARS {
                    if mask[i] {
                        ea[i] = a.exps[i];
                        eb[i] = b.exps[i];
                    } else {
                        ra[i] = a.exps[i];
                        rb[i] = b.exps[i];
                    }
                }
                grevlex_cmp(&ea, &eb).then_with(|| grevlex_cmp(&ra, &rb))
            }
            TermOrder::Weighted(w) => {
                let da: i64 = (0..NVARS).map(|i| w[i] * a.exps[i] as i64).sum();
                let db: i64 = (0..NVARS).map(|i| w[i] * b.exps[i] as i64).sum();
                da.cmp(&db).then_with(|| grevlex_cmp(&a.exps, &b.exps))
            }
            TermOrder::GrevlexVarLast(last) => {
                let da: u32 = a.exps.iter().sum();
                let db: u32 = b.exps.iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // reverse scan: the chosen variable first, then w..x
                let scan = std::iter::once(*last).chain((0..NVARS).rev().filter(|i| i != last));
                for i in scan {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// All monomials of total degree exactly `d`, in descending grevlex order.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=(d - a)).rev() {
            for c in (0..=(d - a - b)).rev() {
                let e = d - a - b - c;
                out.push(Monomial::new([a, b, c, e]));
            }
        }
    }
    out.sort_by(|m, n| TermOrder::Grevlex.cmp(n, m));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_textbook_cases() {
        let ord = TermOrder::Grevlex;
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert_eq!(ord.cmp(&x, &y), Ordering::Greater);
        // y^2 > xz, yz > xw, z^2 > yw
        let y2 = Monomial::new([0, 2, 0, 0]);
        let xz = Monomial::new([1, 0, 1, 0]);
        assert_eq!(ord.cmp(&y2, &xz), Ordering::Greater);
        let yz = Monomial::new([0, 1, 1, 0]);
        let xw = Monomial::new([1, 0, 0, 1]);
        assert_eq!(ord.cmp(&yz, &xw), Ordering::Greater);
    }

    #[test]
    fn lex_vs_grevlex_differ() {
        // x > y^2 in lex, but y^2 > x in any graded order
        let x = Monomial::var(0);
        let y2 = Monomial::new([0, 2, 0, 0]);
        assert_eq!(TermOrder::Lex.cmp(&x, &y2), Ordering::Greater);
        assert_eq!(TermOrder::Grevlex.cmp(&x, &y2), Ordering::Less);
    }

    #[test]
    fn elim_block_dominates() {
        // eliminate x: any monomial containing x beats any x-free monomial
        let ord = TermOrder::Elim([true, false, false, false]);
        let x = Monomial::var(0);
        let w5 = Monomial::new([0, 0, 0, 5]);
        assert_eq!(ord.cmp(&x, &w5), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(0).len(), 1);
        assert_eq!(monomials_of_degree(3).len(), 20);
        assert_eq!(monomials_of_degree(5).len(), 56);
    }

    #[test]
    fn lcm_gcd_div() {
        let a = Monomial::new([2, 1, 0, 0]);
        let b = Monomial::new([1, 2, 0, 1]);
        assert_eq!(a.lcm(&b).exps, [2, 2, 0, 1]);
        assert_eq!(a.gcd(&b).exps, [1, 1, 0, 0]);
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.gcd(&b).div(&a).unwrap().exps, [1, 0, 0, 0]);
    }
}
