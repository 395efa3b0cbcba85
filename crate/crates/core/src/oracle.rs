//! Brute-force checks that do not rely on the `F_n` correspondence.
//!
//! [`brute_cyclic_quandles`] finds every quandle structure whose translations
//! are `(n-1)`-cycles straight from the axioms, and [`brute_iso_classes`]
//! groups them by scanning all `n!` bijections. [`cross_check`] then compares
//! the outcome with the enumeration in [`crate::classify`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{self, ClassifyError};
use crate::perm::Permutation;
use crate::quandle::{are_isomorphic, is_homomorphism, Quandle};

/// Largest `n` for the pruned structure search.
pub const MAX_BRUTE_DEGREE: usize = 6;
/// Largest `n` for exhaustive tuple scans without pruning.
pub const MAX_UNPRUNED_DEGREE: usize = 5;
/// Largest `n` for the `n!` bijection scan.
pub const MAX_BIJECTION_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("inputs have mixed cardinalities {0} and {1}")]
    MixedCardinality(usize, usize),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

fn check_range(n: usize, min: usize, max: usize) -> Result<(), OracleError> {
    if n < min || n > max {
        return Err(OracleError::OutOfRange { n, min, max });
    }
    Ok(())
}

/// All `(n-1)`-cycles of degree `n` fixing `x`, in lexicographic order of
/// their cycle word.
pub fn cycles_fixing(n: usize, x: usize) -> Vec<Permutation> {
    let others: Vec<usize> = (1..=n).filter(|&p| p != x).collect();
    let (head, rest) = others.split_first().expect("n >= 2");
    let mut rest = rest.to_vec();
    let mut out = Vec::new();
    loop {
        let mut cycle = vec![*head];
        cycle.extend_from_slice(&rest);
        out.push(Permutation::from_cycles(n, &[cycle]).expect("distinct points"));
        if !next_permutation(&mut rest) {
            return out;
        }
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every tuple `(s_1, ..., s_n)` with `s_x` an `(n-1)`-cycle fixing `x`,
/// valid or not, in odometer order.
pub fn cyclic_translation_tuples(n: usize) -> impl Iterator<Item = Vec<Permutation>> {
    let choices: Vec<Vec<Permutation>> = (1..=n).map(|x| cycles_fixing(n, x)).collect();
    let mut index = vec![0usize; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tuple = index
            .iter()
            .enumerate()
            .map(|(x, &i)| choices[x][i].clone())
            .collect();
        done = true;
        for x in (0..n).rev() {
            index[x] += 1;
            if index[x] < choices[x].len() {
                done = false;
                break;
            }
            index[x] = 0;
        }
        Some(tuple)
    })
}

/// Partial assignment of translations.
#[derive(Clone)]
struct Assignment {
    slots: Vec<Option<Permutation>>,
}

impl Assignment {
    /// Applies `s_(s_x(y)) = s_x s_y s_x⁻¹` to a fixpoint. False on conflict.
    fn propagate(&mut self) -> bool {
        let n = self.slots.len();
        loop {
            let mut changed = false;
            for x in 0..n {
                let Some(sx) = self.slots[x].clone() else {
                    continue;
                };
                for y in 0..n {
                    let Some(sy) = &self.slots[y] else { continue };
                    let forced = sx.conj(sy);
                    let z = sx.apply(y + 1) - 1;
                    match &self.slots[z] {
                        Some(sz) if *sz != forced => return false,
                        Some(_) => {}
                        None => {
                            self.slots[z] = Some(forced);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

fn search(mut state: Assignment, choices: &[Vec<Permutation>], out: &mut Vec<Quandle>) {
    if !state.propagate() {
        return;
    }
    let Some(x) = state.slots.iter().position(Option::is_none) else {
        let maps = state
            .slots
            .into_iter()
            .map(|s| s.expect("complete"))
            .collect();
        // Propagation has already checked every pair, so this cannot fail.
        out.push(Quandle::from_translations(maps).expect("S3 holds after propagation"));
        return;
    };
    for c in &choices[x] {
        let mut next = state.clone();
        next.slots[x] = Some(c.clone());
        search(next, choices, out);
    }
}

pub fn brute_cyclic_quandles(n: usize) -> Result<Vec<Quandle>, OracleError> {
    brute_cyclic_quandles_with(n, classify::default_workers())
}

/// All quandle structures on `{1, ..., n}` whose translations are
/// `(n-1)`-cycles, sorted by translation table. The choices for `s_1` are
/// split across `workers`.
pub fn brute_cyclic_quandles_with(n: usize, workers: usize) -> Result<Vec<Quandle>, OracleError> {
    check_range(n, 3, MAX_BRUTE_DEGREE)?;
    let choices: Vec<Vec<Permutation>> = (1..=n).map(|x| cycles_fixing(n, x)).collect();
    let branch = |first: &Permutation| {
        let mut slots = vec![None; n];
        slots[0] = Some(first.clone());
        let mut found = Vec::new();
        search(Assignment { slots }, &choices, &mut found);
        found
    };
    let per_branch: Vec<Vec<Quandle>> = classify::with_workers(workers, || {
        if workers <= 1 {
            choices[0].iter().map(branch).collect()
        } else {
            choices[0].par_iter().map(branch).collect()
        }
    })?;
    let mut all: Vec<Quandle> = per_branch.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Same result set as [`brute_cyclic_quandles`], by validating every tuple.
pub fn brute_cyclic_quandles_unpruned(n: usize) -> Result<Vec<Quandle>, OracleError> {
    check_range(n, 3, MAX_UNPRUNED_DEGREE)?;
    let mut all: Vec<Quandle> = cyclic_translation_tuples(n)
        .filter_map(|maps| Quandle::from_translations(maps).ok())
        .collect();
    all.sort();
    Ok(all)
}

/// Scans all `n!` bijections for an isomorphism `q1 → q2`, stopping at the
/// first violated homomorphism equation for each.
pub fn brute_isomorphism(q1: &Quandle, q2: &Quandle) -> Option<Permutation> {
    let n = q1.size();
    if q2.size() != n {
        return None;
    }
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        let f = Permutation::from_images(&images).expect("bijection");
        if is_homomorphism(&f, q1, q2) {
            return Some(f);
        }
        if !next_permutation(&mut images) {
            return None;
        }
    }
}

/// One isomorphism class, as indices into the input list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Partitions `quandles` into isomorphism classes with the bijection scan.
/// Representatives are the first member of each class in input order.
pub fn brute_iso_classes(quandles: &[Quandle]) -> Result<Vec<IsoClass>, OracleError> {
    let Some(first) = quandles.first() else {
        return Ok(Vec::new());
    };
    let n = first.size();
    check_range(n, 1, MAX_BIJECTION_DEGREE)?;
    if let Some(q) = quandles.iter().find(|q| q.size() != n) {
        return Err(OracleError::MixedCardinality(n, q.size()));
    }
    let mut classes: Vec<IsoClass> = Vec::new();
    for (i, q) in quandles.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| brute_isomorphism(&quandles[c.representative], q).is_some())
        {
            Some(class) => class.members.push(i),
            None => classes.push(IsoClass {
                representative: i,
                members: vec![i],
            }),
        }
    }
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub representative_index: usize,
    pub s2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub n: usize,
    pub oracle_quandles: usize,
    pub oracle_classes: usize,
    pub fn_count: usize,
    pub matching: Vec<Matching>,
    pub agreed: bool,
    pub mismatches: Vec<String>,
}

impl CrossCheckReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={} oracle_quandles={} oracle_classes={} #F_n={} agreed={}\n",
            self.n, self.oracle_quandles, self.oracle_classes, self.fn_count, self.agreed
        );
        for m in &self.matching {
            out.push_str(&format!(
                "  class #{} <-> {}\n",
                m.representative_index, m.s2
            ));
        }
        for m in &self.mismatches {
            out.push_str(&format!("  MISMATCH: {m}\n"));
        }
        out
    }
}

pub fn cross_check(n: usize) -> Result<CrossCheckReport, OracleError> {
    cross_check_with(n, classify::default_workers())
}

/// Compares the brute-force classification with the `F_n` enumeration:
/// class counts, a one-to-one matching between class representatives and
/// the reconstructed quandles, and agreement between the propagation-based
/// isomorphism search and the bijection scan on every pair it looks at.
pub fn cross_check_with(n: usize, workers: usize) -> Result<CrossCheckReport, OracleError> {
    check_range(n, 3, MAX_BRUTE_DEGREE)?;
    let brute = brute_cyclic_quandles_with(n, workers)?;
    let classes = brute_iso_classes(&brute)?;
    let row = classify::enumerate_fn_with(n, workers)?;
    let images: Vec<Quandle> = row
        .members
        .iter()
        .map(|s2| classify::phi(s2, n))
        .collect::<Result<_, _>>()?;

    let mut mismatches = Vec::new();
    if classes.len() != row.count() {
        mismatches.push(format!(
            "{} oracle classes but #F_n = {}",
            classes.len(),
            row.count()
        ));
    }

    let mut matching = Vec::new();
    let mut used = vec![0usize; images.len()];
    for class in &classes {
        let rep = &brute[class.representative];
        let hits: Vec<usize> = images
            .iter()
            .enumerate()
            .filter(|(j, img)| {
                iso_agrees(
                    &mut mismatches,
                    rep,
                    img,
                    format!("class #{} vs {}", class.representative, row.members[*j]),
                )
            })
            .map(|(j, _)| j)
            .collect();
        match hits.as_slice() {
            [j] => {
                used[*j] += 1;
                matching.push(Matching {
                    representative_index: class.representative,
                    s2: row.members[*j].format_cycles(),
                });
            }
            _ => mismatches.push(format!(
                "class #{} matches {} members of F_n",
                class.representative,
                hits.len()
            )),
        }
        for &m in &class.members {
            iso_agrees(
                &mut mismatches,
                rep,
                &brute[m],
                format!("class #{} vs oracle quandle #{m}", class.representative),
            );
        }
    }
    for (j, &u) in used.iter().enumerate() {
        if u != 1 {
            mismatches.push(format!(
                "{} is matched by {u} oracle classes",
                row.members[j]
            ));
        }
    }

    Ok(CrossCheckReport {
        n,
        oracle_quandles: brute.len(),
        oracle_classes: classes.len(),
        fn_count: row.count(),
        matching,
        agreed: mismatches.is_empty(),
        mismatches,
    })
}

/// Runs both isomorphism procedures on `(a, b)`, logging any disagreement.
/// Returns the bijection scan's verdict.
fn iso_agrees(mismatches: &mut Vec<String>, a: &Quandle, b: &Quandle, what: String) -> bool {
    let fast = are_isomorphic(a, b);
    let slow = brute_isomorphism(a, b).is_some();
    if fast.is_some() != slow {
        mismatches.push(format!("isomorphism procedures disagree on {what}"));
    }
    if let Some(w) = &fast {
        if !w.verify(a, b) {
            mismatches.push(format!("invalid witness for {what}"));
        }
    }
    slow
}
