//! Monomials over a fixed polynomial ring and sets of variables.
//!
//! A monomial is an exponent vector over `n` variables. Squarefree
//! monomials (all exponents 0 or 1) convert losslessly to and from an
//! n-bit mask, which is the representation the combinatorial engines
//! run on.

use std::cmp::Ordering;
use std::fmt;

/// Maximum ring size. Masks of squarefree monomials and variable sets
/// fit comfortably in a `u32` at this cap.
pub const MAX_VARS: usize = 16;

/// A monomial in `K[x1..xn]`, stored as a packed exponent vector.
///
/// Exponents beyond the ring size are kept at zero so that equality and
/// hashing can look at the whole array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    n: u8,
}

impl Monomial {
    /// Builds a monomial from its exponents; the ring size is the slice length.
    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "ring size exceeds MAX_VARS");
        let mut packed = [0u16; MAX_VARS];
        packed[..exps.len()].copy_from_slice(exps);
        Self {
            exps: packed,
            n: exps.len() as u8,
        }
    }

    /// The monomial 1 in a ring with `n` variables.
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        Self {
            exps: [0; MAX_VARS],
            n: n as u8,
        }
    }

    /// The variable `x_{var}` (1-based) in a ring with `n` variables.
    pub fn var(var: usize, n: usize) -> Self {
        assert!(var >= 1 && var <= n && n <= MAX_VARS);
        let mut exps = [0u16; MAX_VARS];
        exps[var - 1] = 1;
        Self { exps, n: n as u8 }
    }

    /// The squarefree monomial whose support is `mask`.
    pub fn from_mask(mask: u32, n: usize) -> Self {
        assert!(n <= MAX_VARS && mask < (1u32 << n));
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate().take(n) {
            if mask & (1 << i) != 0 {
                *e = 1;
            }
        }
        Self { exps, n: n as u8 }
    }

    pub fn ring_size(&self) -> usize {
        self.n as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.n as usize]
    }

    /// Exponent of `x_{var}` (1-based).
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents().iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    /// Mask of the variables with positive exponent.
    pub fn support(&self) -> VarSet {
        let mut mask = 0u32;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        VarSet(mask)
    }

    /// The support mask, provided the monomial is squarefree.
    pub fn squarefree_mask(&self) -> Option<u32> {
        self.is_squarefree().then(|| self.support().mask())
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.n as usize {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Self { exps, n: self.n }
    }

    /// `self / other`, assuming divisibility.
    pub fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.n as usize {
            exps[i] = self.exps[i] - other.exps[i];
        }
        Self { exps, n: self.n }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.n as usize {
            exps[i] = self.exps[i].min(other.exps[i]);
        }
        Self { exps, n: self.n }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut exps = [0u16; MAX_VARS];
        for i in 0..self.n as usize {
            exps[i] = self.exps[i].max(other.exps[i]);
        }
        Self { exps, n: self.n }
    }

    /// Re-reads the monomial in a ring with `m >= n` variables.
    pub fn extended(&self, m: usize) -> Self {
        assert!(m >= self.n as usize && m <= MAX_VARS);
        Self {
            exps: self.exps,
            n: m as u8,
        }
    }

    /// Re-reads the monomial in a smaller ring; the dropped variables
    /// must not occur in it.
    pub fn restricted(&self, m: usize) -> Self {
        assert!(m <= self.n as usize);
        assert!(
            self.exponents()[m..].iter().all(|&e| e == 0),
            "monomial involves dropped variables"
        );
        Self {
            exps: self.exps,
            n: m as u8,
        }
    }

    /// Graded lexicographic comparison: degree first, then exponent
    /// vectors with x1 ranked highest. This is the canonical generator
    /// order, so `x1*x2 < x1*x3 < x2*x4`.
    pub fn cmp_graded_lex(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents().cmp(self.exponents()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_graded_lex(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A set of variable indices, stored as an n-bit mask (bit `i` is `x_{i+1}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_mask(mask: u32) -> Self {
        VarSet(mask)
    }

    /// Full variable set of a ring with `n` variables.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        VarSet(((1u64 << n) - 1) as u32)
    }

    /// Builds a set from 1-based variable indices.
    pub fn from_vars(vars: &[usize]) -> Self {
        let mut mask = 0u32;
        for &v in vars {
            assert!((1..=MAX_VARS).contains(&v));
            mask |= 1 << (v - 1);
        }
        VarSet(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, var: usize) -> bool {
        var >= 1 && self.0 & (1 << (var - 1)) != 0
    }

    pub fn insert(&self, var: usize) -> Self {
        VarSet(self.0 | (1 << (var - 1)))
    }

    pub fn union(&self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based variable indices in ascending order.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=MAX_VARS).filter(move |&v| self.contains(v))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in self.vars() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "x{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
