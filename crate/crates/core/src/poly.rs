//! Sparse exact polynomials in at most two named variables.
//!
//! Coefficients are [`Rat`]; monomials are kept in graded lexicographic
//! order and zero coefficients are never stored, so equality is structural.

use crate::rat::{fmt_rat, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector for up to two variables, ordered graded-lex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub [u32; 2]);

impl Mono {
    pub fn total(&self) -> u32 {
        self.0[0] + self.0[1]
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total(), self.0[0]).cmp(&(other.total(), other.0[0]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in the variables `vars`
/// (at most two, kept sorted by name).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { vars: vec![], terms: BTreeMap::new() }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono([0, 0]), c);
        }
        p
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The variable `name` itself.
    pub fn var(name: &str) -> Self {
        Poly::affine(name, Rat::one(), Rat::zero())
    }

    /// `a * name + b`.
    pub fn affine(name: &str, a: Rat, b: Rat) -> Self {
        let mut p = Poly { vars: vec![name.to_string()], terms: BTreeMap::new() };
        if !a.is_zero() {
            p.terms.insert(Mono([1, 0]), a);
        }
        if !b.is_zero() {
            p.terms.insert(Mono([0, 0]), b);
        }
        p.canonicalize();
        p
    }

    /// Build from explicit (exponents, coefficient) pairs.
    pub fn from_terms(vars: &[&str], terms: &[([u32; 2], Rat)]) -> Self {
        assert!(vars.len() <= 2, "at most two variables");
        let mut p = Poly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (m, c) in terms {
            if !c.is_zero() {
                let e = p.terms.entry(Mono(*m)).or_insert_with(Rat::zero);
                *e += c.clone();
                if e.is_zero() {
                    p.terms.remove(&Mono(*m));
                }
            }
        }
        p.canonicalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Mono([0, 0])).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    /// Degree in a single variable; 0 if the variable does not occur.
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Leading (graded-lex largest) monomial and coefficient.
    pub fn leading(&self) -> Option<(Mono, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Drop unused variables and sort the remaining ones by name, so that
    /// structurally equal polynomials compare equal.
    fn canonicalize(&mut self) {
        let used: Vec<bool> = (0..2)
            .map(|i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        let mut kept: Vec<(usize, String)> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i < 2 && used.get(*i).copied().unwrap_or(false))
            .map(|(i, v)| (i, v.clone()))
            .collect();
        kept.sort_by(|a, b| a.1.cmp(&b.1));
        if kept.len() == self.vars.len() && kept.iter().enumerate().all(|(j, (i, _))| j == *i) {
            return;
        }
        let mut terms = BTreeMap::new();
        for (m, c) in std::mem::take(&mut self.terms) {
            let mut e = [0u32; 2];
            for (j, (i, _)) in kept.iter().enumerate() {
                e[j] = m.0[*i];
            }
            *terms.entry(Mono(e)).or_insert_with(Rat::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        self.vars = kept.into_iter().map(|(_, v)| v).collect();
        self.terms = terms;
    }

    /// Merge the variable sets of `self` and `other`; returns the common
    /// variable list and both polynomials re-indexed over it.
    fn aligned(&self, other: &Self) -> (Vec<String>, BTreeMap<Mono, Rat>, BTreeMap<Mono, Rat>) {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        assert!(vars.len() <= 2, "polynomial would need more than two variables: {vars:?}");
        let remap = |p: &Poly, vars: &[String]| {
            let mut out = BTreeMap::new();
            for (m, c) in &p.terms {
                let mut e = [0u32; 2];
                for (i, v) in p.vars.iter().enumerate() {
                    let j = vars.iter().position(|w| w == v).unwrap();
                    e[j] = m.0[i];
                }
                out.insert(Mono(e), c.clone());
            }
            out
        };
        let a = remap(self, &vars);
        let b = remap(other, &vars);
        (vars, a, b)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (vars, a, b) = self.aligned(other);
        let mut terms = a;
        for (m, c) in b {
            let e = terms.entry(m).or_insert_with(Rat::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(&m);
            }
        }
        let mut p = Poly { vars, terms };
        p.canonicalize();
        p
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -c.clone();
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (vars, a, b) = self.aligned(other);
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = Mono([ma.0[0] + mb.0[0], ma.0[1] + mb.0[1]]);
                let e = terms.entry(m).or_insert_with(Rat::zero);
                *e += ca * cb;
                if e.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        let mut p = Poly { vars, terms };
        p.canonicalize();
        p
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v *= c;
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute a rational value for one variable.
    pub fn eval_var(&self, name: &str, value: &Rat) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[i];
            e[i] = 0;
            let mut pow = Rat::one();
            for _ in 0..k {
                pow *= value;
            }
            let coeff = c * &pow;
            let t = out.terms.entry(Mono(e)).or_insert_with(Rat::zero);
            *t += coeff;
            if t.is_zero() {
                out.terms.remove(&Mono(e));
            }
        }
        out.canonicalize();
        out
    }

    /// Evaluate a polynomial all of whose variables are bound.
    pub fn eval_full(&self, bindings: &[(&str, Rat)]) -> Rat {
        let mut p = self.clone();
        for (name, v) in bindings {
            p = p.eval_var(name, v);
        }
        assert!(p.is_constant(), "unbound variable in {p}");
        p.constant_term()
    }

    /// Exact multivariate division: returns `q` with `self = q * d`,
    /// or `None` when the division is not exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (vars, mut rem, db) = self.aligned(d);
        let dp = Poly { vars: vars.clone(), terms: db };
        let (dm, dc) = dp.leading().map(|(m, c)| (m, c.clone()))?;
        let mut q = Poly { vars: vars.clone(), terms: BTreeMap::new() };
        while let Some((&rm, rc)) = rem.iter().next_back() {
            if rm.0[0] < dm.0[0] || rm.0[1] < dm.0[1] {
                return None;
            }
            let qm = Mono([rm.0[0] - dm.0[0], rm.0[1] - dm.0[1]]);
            let qc = rc / &dc;
            // rem -= (qc * X^qm) * d
            for (m, c) in &dp.terms {
                let t = Mono([m.0[0] + qm.0[0], m.0[1] + qm.0[1]]);
                let e = rem.entry(t).or_insert_with(Rat::zero);
                *e -= &qc * c;
                if e.is_zero() {
                    rem.remove(&t);
                }
            }
            q.terms.insert(qm, qc);
        }
        q.canonicalize();
        Some(q)
    }

    /// Coefficients of a univariate polynomial, constant term first.
    /// Panics if any other variable occurs.
    pub fn univariate_coeffs(&self, name: &str) -> Vec<Rat> {
        for v in &self.vars {
            assert!(v == name, "{self} is not univariate in {name}");
        }
        let deg = self.degree_in(name) as usize;
        let mut out = vec![Rat::zero(); deg + 1];
        let i = self.var_index(name);
        for (m, c) in &self.terms {
            let e = i.map(|i| m.0[i] as usize).unwrap_or(0);
            out[e] = c.clone();
        }
        out
    }

    /// Divide out `(name - root)` as many times as it exactly divides `self`
    /// (`self` univariate in `name`); returns multiplicity and quotient.
    pub fn extract_linear_root(&self, name: &str, root: &Rat) -> (u32, Poly) {
        let mut mult = 0;
        let mut cur = self.clone();
        if cur.is_zero() {
            return (0, cur);
        }
        loop {
            let coeffs = cur.univariate_coeffs(name);
            if coeffs.len() == 1 {
                break;
            }
            // synthetic division by (x - root)
            let mut q = vec![Rat::zero(); coeffs.len() - 1];
            let mut carry = Rat::zero();
            for i in (0..coeffs.len()).rev() {
                let v = &coeffs[i] + &carry;
                if i == 0 {
                    if !v.is_zero() {
                        return (mult, cur);
                    }
                } else {
                    carry = &v * root;
                    q[i - 1] = v;
                }
            }
            mult += 1;
            cur = Poly::from_terms(
                &[name],
                &q.iter()
                    .enumerate()
                    .map(|(i, c)| ([i as u32, 0], c.clone()))
                    .collect::<Vec<_>>(),
            );
        }
        (mult, cur)
    }

    /// All rational roots (with multiplicity) of a univariate polynomial,
    /// found by the rational-root test; also returns the root-free quotient.
    pub fn rational_roots(&self, name: &str) -> (Vec<(Rat, u32)>, Poly) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut cur = self.clone();
        let mut roots = Vec::new();
        if cur.is_zero() || cur.is_constant() {
            return (roots, cur);
        }
        // clear denominators, then p | a0 and q | an
        loop {
            let coeffs = cur.univariate_coeffs(name);
            if coeffs.len() == 1 {
                break;
            }
            let mut den = BigInt::from(1);
            for c in &coeffs {
                den = den.lcm(c.denom());
            }
            let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
            let lo = ints.iter().find(|c| !c.is_zero()).unwrap().clone();
            let hi = ints.last().unwrap().clone();
            let mut found = None;
            // trailing zero coefficients mean a root at 0
            if coeffs[0].is_zero() {
                found = Some(Rat::zero());
            } else {
                'search: for p in divisors(&lo) {
                    for q in divisors(&hi) {
                        for sign in [1i64, -1] {
                            let cand = Rat::new(p.clone() * BigInt::from(sign), q.clone());
                            if eval_univ(&coeffs, &cand).is_zero() {
                                found = Some(cand);
                                break 'search;
                            }
                        }
                    }
                }
            }
            match found {
                None => break,
                Some(r) => {
                    let (m, rest) = cur.extract_linear_root(name, &r);
                    debug_assert!(m >= 1);
                    roots.push((r, m));
                    cur = rest;
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, cur)
    }

    /// Homogeneous part of top total degree.
    pub fn leading_form(&self) -> Poly {
        let d = self.total_degree();
        let mut p = Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        };
        p.canonicalize();
        p
    }

    /// True when `self = c * other` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (_, a, b) = self.aligned(other);
        if a.len() != b.len() {
            return false;
        }
        let (m0, c0) = a.iter().next_back().unwrap();
        let Some(d0) = b.get(m0) else { return false };
        let ratio = c0 / d0;
        a.iter().all(|(m, c)| b.get(m).map(|d| d * &ratio == *c).unwrap_or(false))
    }
}

fn eval_univ(coeffs: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_traits::Signed;
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    // trial division is fine: coefficients stay desk-sized here
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .enumerate()
                .filter(|(i, _)| m.0[*i] > 0)
                .map(|(i, v)| {
                    if m.0[i] == 1 {
                        v.clone()
                    } else {
                        format!("{}^{}", v, m.0[i])
                    }
                })
                .collect();
            let mono = mono.join("*");
            let cs = fmt_rat(c);
            let piece = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if first {
                write!(f, "{piece}")?;
                first = false;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratz};

    #[test]
    fn arithmetic_and_equality() {
        let c = Poly::var("c");
        let h = Poly::var("h");
        let p = c.mul(&h).add(&Poly::constant(rat(1, 2)));
        let q = h.mul(&c).add(&Poly::constant(rat(1, 2)));
        assert_eq!(p, q);
        assert_eq!(p.sub(&p), Poly::zero());
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn canonical_drops_unused_vars() {
        let p = Poly::from_terms(&["c", "h"], &[([2, 0], ratz(1))]);
        let q = Poly::from_terms(&["c"], &[([2, 0], ratz(1))]);
        assert_eq!(p, q);
    }

    #[test]
    fn exact_division() {
        let c = Poly::var("c");
        let f = c.add(&Poly::constant(rat(22, 5)));
        let p = c.pow(2).mul(&f);
        assert_eq!(p.div_exact(&f).unwrap(), c.pow(2));
        assert_eq!(p.div_exact(&c).unwrap(), c.mul(&f));
        assert!(c.add(&Poly::one()).div_exact(&c).is_none());
    }

    #[test]
    fn linear_root_extraction() {
        let c = Poly::var("c");
        let p = c.pow(2).mul(&c.add(&Poly::constant(rat(22, 5))));
        let (m, rest) = p.extract_linear_root("c", &ratz(0));
        assert_eq!(m, 2);
        assert_eq!(rest, c.add(&Poly::constant(rat(22, 5))));
        let (m2, rest2) = rest.extract_linear_root("c", &rat(-22, 5));
        assert_eq!(m2, 1);
        assert!(rest2.is_constant());
        // non-root leaves the polynomial alone
        let k = Poly::var("k").add(&Poly::constant(ratz(2)));
        let (m3, rest3) = k.extract_linear_root("k", &ratz(0));
        assert_eq!(m3, 0);
        assert_eq!(rest3, k);
    }

    #[test]
    fn rational_root_scan() {
        let c = Poly::var("c");
        let p = c
            .pow(2)
            .mul(&c.add(&Poly::constant(rat(22, 5))))
            .scale(&rat(-3, 7));
        let (roots, rest) = p.rational_roots("c");
        assert_eq!(roots, vec![(rat(-22, 5), 1), (ratz(0), 2)]);
        assert!(rest.is_constant());
    }

    #[test]
    fn proportionality_ignores_scale() {
        let c = Poly::var("c");
        let p = c.pow(2).add(&c.scale(&rat(22, 5)));
        assert!(p.proportional_to(&p.scale(&rat(-7, 3))));
        assert!(!p.proportional_to(&c.pow(2)));
    }
}
