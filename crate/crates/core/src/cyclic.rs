//! Quandles of cyclic type and the permutation-set conditions that describe them.
//!
//! A [`SigmaSet`] is a set of `(n-1)`-cycles. When it is closed under
//! conjugation by its own members (D1) and every point has exactly one fixer
//! (D2), assigning each point its fixer gives a quandle of cyclic type, and
//! every such quandle arises this way from its own translations. Pairs
//! `(u1, u2)` satisfying the fixed-point condition (E1) and the conjugate-set
//! equality (E2) generate such a set.

use thiserror::Error;

use crate::perm::Permutation;
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("cyclic type needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("quandle is not of cyclic type")]
    NotCyclicType,
    #[error("{0} is not a cyclic permutation of order n - 1 on {1} points")]
    NotFullCycle(String, usize),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("permutation set violates {0}")]
    DCondition(&'static str),
    #[error("pair violates {0}")]
    ECondition(&'static str),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// Every `s_x` acts on `X ∖ {x}` as one `(n-1)`-cycle.
pub fn is_cyclic_type(q: &Quandle) -> Result<bool, CyclicError> {
    check_size(q.size())?;
    Ok(q.translations()
        .iter()
        .all(Permutation::is_full_cycle_minus_one))
}

/// Connected, and at least one translation is an `(n-1)`-cycle.
pub fn is_cyclic_type_via_characterization(q: &Quandle) -> Result<bool, CyclicError> {
    check_size(q.size())?;
    Ok(q.is_connected()
        && q.translations()
            .iter()
            .any(Permutation::is_full_cycle_minus_one))
}

fn check_size(n: usize) -> Result<(), CyclicError> {
    if n < 3 {
        return Err(CyclicError::TooSmall(n));
    }
    Ok(())
}

/// A set of `(n-1)`-cycles in `S_n`, kept sorted by image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaSet {
    n: usize,
    elements: Vec<Permutation>,
}

impl SigmaSet {
    /// Duplicates collapse; every element must be an `(n-1)`-cycle of degree `n`.
    pub fn new(n: usize, elements: Vec<Permutation>) -> Result<SigmaSet, CyclicError> {
        check_size(n)?;
        for e in &elements {
            if e.degree() != n {
                return Err(CyclicError::DegreeMismatch {
                    expected: n,
                    got: e.degree(),
                });
            }
            if !e.is_full_cycle_minus_one() {
                return Err(CyclicError::NotFullCycle(e.format_cycles(), n));
            }
        }
        Ok(SigmaSet::from_sorted(n, elements))
    }

    fn from_sorted(n: usize, mut elements: Vec<Permutation>) -> SigmaSet {
        elements.sort_unstable();
        elements.dedup();
        SigmaSet { n, elements }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// `{ g s g⁻¹ | s ∈ Σ }`.
    pub fn conjugated_by(&self, g: &Permutation) -> Result<SigmaSet, CyclicError> {
        if g.degree() != self.n {
            return Err(CyclicError::DegreeMismatch {
                expected: self.n,
                got: g.degree(),
            });
        }
        let elements = self.elements.iter().map(|s| g.conj(s)).collect();
        Ok(SigmaSet::from_sorted(self.n, elements))
    }

    /// D1: `s⁻¹ Σ s ⊂ Σ` for every `s ∈ Σ`.
    pub fn satisfies_d1(&self) -> bool {
        self.elements.iter().all(|s| {
            let s_inv = s.inverse();
            self.elements.iter().all(|t| self.contains(&s_inv.conj(t)))
        })
    }

    /// D2: every point is fixed by exactly one element.
    pub fn satisfies_d2(&self) -> bool {
        let mut fixers = vec![0usize; self.n];
        for s in &self.elements {
            for x in s.fixed_points() {
                fixers[x - 1] += 1;
            }
        }
        fixers.iter().all(|&c| c == 1)
    }

    pub fn check_d_conditions(&self) -> bool {
        self.satisfies_d2() && self.satisfies_d1()
    }

    /// The element fixing `x`, if any.
    pub fn fixer(&self, x: usize) -> Option<&Permutation> {
        self.elements.iter().find(|s| s.apply(x) == x)
    }
}

/// `{ s_x | x ∈ X }` for a quandle of cyclic type.
pub fn translations_of(q: &Quandle) -> Result<SigmaSet, CyclicError> {
    if !is_cyclic_type(q)? {
        return Err(CyclicError::NotCyclicType);
    }
    Ok(SigmaSet::from_sorted(q.size(), q.translations().to_vec()))
}

/// The quandle whose translation at `x` is the unique element of `Σ` fixing `x`.
pub fn quandle_from_sigma(sigma: &SigmaSet) -> Result<Quandle, CyclicError> {
    if !sigma.satisfies_d2() {
        return Err(CyclicError::DCondition("D2"));
    }
    if !sigma.satisfies_d1() {
        return Err(CyclicError::DCondition("D1"));
    }
    let maps = (1..=sigma.n)
        .map(|x| sigma.fixer(x).expect("D2 guarantees a fixer").clone())
        .collect();
    Ok(Quandle::from_translations_unchecked(maps))
}

/// `[by¹ p by⁻¹, by² p by⁻², ..., by^len p by^-len]`, built by repeated conjugation.
pub(crate) fn conjugate_chain(by: &Permutation, p: &Permutation, len: usize) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::with_capacity(len);
    for i in 0..len {
        let next = by.conj(if i == 0 { p } else { &out[i - 1] });
        out.push(next);
    }
    out
}

/// The two sides of E2, each sorted:
/// `{ u1^m u2 u1^-m }` and `{ u2^m u1 u2^-m }` for `m = 1..=n-2`.
pub fn e2_sides(u1: &Permutation, u2: &Permutation) -> (Vec<Permutation>, Vec<Permutation>) {
    let len = u1.degree().saturating_sub(2);
    let mut left = conjugate_chain(u1, u2, len);
    let mut right = conjugate_chain(u2, u1, len);
    left.sort_unstable();
    right.sort_unstable();
    (left, right)
}

/// E1 (`u1(1) = 1`, `u2(2) = 2`) and E2. Pairs outside `(S_n)_{n-1}` fail.
pub fn check_e_conditions(u1: &Permutation, u2: &Permutation) -> bool {
    let n = u1.degree();
    if n < 3 || u2.degree() != n {
        return false;
    }
    if !u1.is_full_cycle_minus_one() || !u2.is_full_cycle_minus_one() {
        return false;
    }
    if u1.apply(1) != 1 || u2.apply(2) != 2 {
        return false;
    }
    let (left, right) = e2_sides(u1, u2);
    left == right
}

/// `{u1, u2} ∪ { u1^m u2 u1^-m | m = 1..=n-2 }`.
pub fn sigma_from_pair(u1: &Permutation, u2: &Permutation) -> Result<SigmaSet, CyclicError> {
    let n = u1.degree();
    check_size(n)?;
    if u2.degree() != n {
        return Err(CyclicError::DegreeMismatch {
            expected: n,
            got: u2.degree(),
        });
    }
    for u in [u1, u2] {
        if !u.is_full_cycle_minus_one() {
            return Err(CyclicError::NotFullCycle(u.format_cycles(), n));
        }
    }
    if u1.apply(1) != 1 || u2.apply(2) != 2 {
        return Err(CyclicError::ECondition("E1"));
    }
    let (left, right) = e2_sides(u1, u2);
    if left != right {
        return Err(CyclicError::ECondition("E2"));
    }
    let mut elements = left;
    elements.push(u1.clone());
    elements.push(u2.clone());
    Ok(SigmaSet::from_sorted(n, elements))
}
