//! Monomial ideals given by their minimal generators, and quotient
//! presentations `J/I`.
//!
//! Generators are kept as a divisibility antichain in graded
//! lexicographic order, so equal ideals compare equal and output is
//! stable. Membership of a monomial is always decided by divisibility
//! against the generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet, MAX_VARS};

/// A monomial ideal of `K[x1..xn]`.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    n: usize,
    gens: Vec<Monomial>,
}

impl Ideal {
    /// Canonicalizes a generating set: drops generators divisible by
    /// another one and sorts the survivors in graded lex order.
    pub fn normalize(n: usize, gens: &[Monomial]) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::RingTooLarge { n, max: MAX_VARS });
        }
        for g in gens {
            if g.ring_size() != n {
                return Err(Error::RingSizeMismatch {
                    expected: n,
                    found: g.ring_size(),
                });
            }
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if gens
                .iter()
                .any(|h| h.divides(g) && !g.divides(h))
            {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(*g);
            }
        }
        minimal.sort();
        Ok(Self { n, gens: minimal })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Principal ideal `(m)`.
    pub fn principal(m: Monomial) -> Self {
        Self {
            n: m.ring_size(),
            gens: vec![m],
        }
    }

    /// Squarefree ideal from support masks of its generators.
    pub fn from_masks(n: usize, masks: &[u32]) -> Self {
        let gens: Vec<Monomial> = masks.iter().map(|&m| Monomial::from_mask(m, n)).collect();
        Self::normalize(n, &gens).expect("masks fit the ring")
    }

    pub fn ring_size(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means different from the whole ring; the zero ideal is proper.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Union of the generator supports.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.ring_size(), self.n);
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership for a squarefree monomial given by its support mask.
    pub fn contains_mask(&self, mask: u32) -> bool {
        self.gens.iter().any(|g| {
            g.squarefree_mask()
                .is_some_and(|gm| gm & !mask == 0)
        })
    }

    /// Ideal containment `self ⊆ other`, decided generator-wise.
    pub fn is_contained_in(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Ideal sum: normalize the union of the generating sets.
    pub fn sum(&self, other: &Ideal) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Self::normalize(self.n, &gens)
    }

    /// Colon ideal `(self : v)`.
    pub fn colon(&self, v: &Monomial) -> Result<Self> {
        if v.ring_size() != self.n {
            return Err(Error::RingSizeMismatch {
                expected: self.n,
                found: v.ring_size(),
            });
        }
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.div_exact(&g.gcd(v)))
            .collect();
        Self::normalize(self.n, &gens)
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &Ideal) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Self::normalize(self.n, &gens)
    }

    /// Product by a monomial: `v * self`.
    pub fn scaled(&self, v: &Monomial) -> Result<Self> {
        if v.ring_size() != self.n {
            return Err(Error::RingSizeMismatch {
                expected: self.n,
                found: v.ring_size(),
            });
        }
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.mul(v)).collect();
        Self::normalize(self.n, &gens)
    }

    /// Splits a squarefree ideal along `x_k`: returns `(I, J)` with
    /// `I` generated by the generators not divisible by `x_k` and
    /// `J = (self : x_k)`, so that `self = I + x_k * J` and `I ⊆ J`.
    /// Both parts live in the same ring but avoid `x_k`.
    pub fn split_var(&self, k: usize) -> Result<(Ideal, Ideal)> {
        if k < 1 || k > self.n {
            return Err(Error::VarOutOfRange { var: k, n: self.n });
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let xk = Monomial::var(k, self.n);
        let kept: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| !xk.divides(g))
            .copied()
            .collect();
        let inner = Self::normalize(self.n, &kept)?;
        let outer = self.colon(&xk)?;
        debug_assert!(inner.is_contained_in(&outer));
        Ok((inner, outer))
    }

    /// Minimal primes of a squarefree proper nonzero ideal, as variable
    /// sets: the inclusion-minimal covers of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<VarSet>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let supports: Vec<u32> = self.gens.iter().map(|g| g.support().mask()).collect();
        let mut covers = Vec::new();
        branch_covers(&supports, 0, &mut covers);
        covers.sort_unstable();
        covers.dedup();
        // branching can emit non-minimal covers; keep the antichain
        let minimal: Vec<u32> = covers
            .iter()
            .filter(|&&c| !covers.iter().any(|&d| d != c && d & !c == 0))
            .copied()
            .collect();
        let mut out: Vec<VarSet> = minimal.into_iter().map(VarSet::from_mask).collect();
        out.sort_by_key(|p| (p.len(), p.mask()));
        Ok(out)
    }

    /// The monomial prime ideal `(x_i : i in vars)`.
    pub fn prime_of(vars: VarSet, n: usize) -> Self {
        let gens: Vec<Monomial> = vars.vars().map(|v| Monomial::var(v, n)).collect();
        Self::normalize(n, &gens).expect("variables fit the ring")
    }

    /// Re-reads the ideal in a ring with `m >= n` variables.
    pub fn extended(&self, m: usize) -> Self {
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.extended(m)).collect();
        Self { n: m, gens }
    }

    /// Re-reads the ideal in a smaller ring; its support must fit.
    pub fn restricted(&self, m: usize) -> Self {
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.restricted(m)).collect();
        Self { n: m, gens }
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingSizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }
}

/// Cover enumeration: every minimal cover of the supports is produced
/// (possibly alongside some redundant ones, filtered by the caller).
fn branch_covers(supports: &[u32], chosen: u32, out: &mut Vec<u32>) {
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            for v in 0..32 {
                if s & (1 << v) != 0 {
                    branch_covers(supports, chosen | (1 << v), out);
                }
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.gens {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// The module `J/I` presented by a pair of nested ideals.
///
/// `S/I` is presented with the unit ideal outside; an ideal `J` as a
/// module is presented with the zero ideal inside. The unit ideal is
/// only allowed in the outer slot.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotientPresentation {
    n: usize,
    inner: Ideal,
    outer: Ideal,
}

impl QuotientPresentation {
    pub fn new(inner: Ideal, outer: Ideal) -> Result<Self> {
        if inner.ring_size() != outer.ring_size() {
            return Err(Error::RingSizeMismatch {
                expected: outer.ring_size(),
                found: inner.ring_size(),
            });
        }
        if inner.is_unit() {
            return Err(Error::InvalidPresentation(
                "the unit ideal may only appear as the outer ideal".into(),
            ));
        }
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidPresentation(format!(
                "({inner}) is not contained in ({outer})"
            )));
        }
        Ok(Self {
            n: inner.ring_size(),
            inner,
            outer,
        })
    }

    /// Presents the quotient ring `S/I`.
    pub fn quotient_ring(ideal: Ideal) -> Result<Self> {
        let n = ideal.ring_size();
        Self::new(ideal, Ideal::unit(n))
    }

    /// Presents the ideal `J` as a module.
    pub fn of_ideal(ideal: Ideal) -> Result<Self> {
        let n = ideal.ring_size();
        Self::new(Ideal::zero(n), ideal)
    }

    pub fn ring_size(&self) -> usize {
        self.n
    }

    pub fn inner(&self) -> &Ideal {
        &self.inner
    }

    pub fn outer(&self) -> &Ideal {
        &self.outer
    }

    pub fn is_squarefree(&self) -> bool {
        self.inner.is_squarefree() && self.outer.is_squarefree()
    }

    /// The module is zero exactly when the ideals are equal.
    pub fn is_zero_module(&self) -> bool {
        self.outer.is_contained_in(&self.inner)
    }

    /// Monomial membership in the module's monomial basis.
    pub fn basis_contains(&self, m: &Monomial) -> bool {
        self.outer.contains(m) && !self.inner.contains(m)
    }

    /// Associated primes as variable sets. For a radical presentation
    /// these are the minimal primes of `inner` that do not contain
    /// `outer`; an ideal presented as a module (inner = 0) has the zero
    /// prime, reported as the empty variable set.
    pub fn ass_primes(&self) -> Result<Vec<VarSet>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_zero_module() {
            return Err(Error::ZeroModule);
        }
        if self.inner.is_zero() {
            return Ok(vec![VarSet::EMPTY]);
        }
        let primes = self.inner.minimal_primes()?;
        Ok(primes
            .into_iter()
            .filter(|p| {
                !self
                    .outer
                    .gens()
                    .iter()
                    .all(|g| !g.support().intersection(*p).is_empty())
            })
            .collect())
    }

    /// Krull dimension of the module; the zero module gets the
    /// negative-infinity sentinel.
    pub fn dimension(&self) -> Result<Dimension> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_zero_module() {
            return Ok(Dimension::NegInfinity);
        }
        let n = self.n;
        let dim = self
            .ass_primes()?
            .iter()
            .map(|p| n - p.len())
            .max()
            .expect("nonzero module has an associated prime");
        Ok(Dimension::Finite(dim))
    }
}

impl fmt::Display for QuotientPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.outer.is_unit() {
            write!(f, "S/({})", self.inner)
        } else if self.inner.is_zero() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for QuotientPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Module dimension with the zero-module sentinel.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Dimension {
    NegInfinity,
    Finite(usize),
}

impl Dimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(*d),
            Dimension::NegInfinity => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::NegInfinity => write!(f, "-inf"),
            Dimension::Finite(d) => write!(f, "{d}"),
        }
    }
}
