//! Enumeration of `F_n` and reconstruction of the quandle attached to each member.
//!
//! With `s1 = (2 3 ... n)`, `F_n` is the set of `(n-1)`-cycles `s2` fixing 2
//! whose conjugate chains `{ s2^m s1 s2^-m }` and `{ s1^m s2 s1^-m }`
//! (`m = 1..=n-2`) coincide. Its members index the isomorphism classes of
//! quandles of cyclic type of cardinality `n`, one-to-one.
//!
//! Candidates are the cycles `(1 a_1 ... a_{n-2})` with `(a_1, ..., a_{n-2})`
//! running over the orderings of `{3, ..., n}` in lexicographic order. Each
//! candidate first goes through a cheap necessary condition: with `m` such
//! that `s1^m(2) = s2(1)`, a member must satisfy `s1^m s2 s1^-m = s2 s1 s2^-1`.
//! Survivors get the full set comparison.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclic::conjugate_chain;
use crate::perm::Permutation;
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("n must be at least 3, got {0}")]
    TooSmall(usize),
    #[error("n = {0} is too large to enumerate")]
    TooLarge(usize),
    #[error("invalid range {0}..={1}")]
    BadRange(usize, usize),
    #[error("s2 has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("{0} fails F1: it must be a cyclic permutation of order n - 1 fixing 2")]
    NotF1(String),
    #[error("{0} fails F2: the two conjugate sets differ")]
    NotF2(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// Enumeration runs in a `u8` word; 10! candidates at n = 12 is already a few seconds.
const MAX_ENUMERATION_DEGREE: usize = 20;

fn check_n(n: usize) -> Result<(), ClassifyError> {
    if n < 3 {
        return Err(ClassifyError::TooSmall(n));
    }
    Ok(())
}

/// `s1 = (2 3 ... n)`, fixing 1.
pub fn base_cycle(n: usize) -> Result<Permutation, ClassifyError> {
    check_n(n)?;
    let cycle: Vec<usize> = (2..=n).collect();
    Ok(Permutation::from_cycles(n, &[cycle]).expect("valid cycle"))
}

/// The candidate `(1 a_1 ... a_{n-2})` for a word over `{3, ..., n}`.
fn candidate_from_word(n: usize, word: &[u8]) -> Permutation {
    let mut images = vec![0u8; n];
    fill_candidate(word, &mut images);
    Permutation::from_raw(images)
}

/// Writes the 0-based images of `(1 a_1 ... a_{n-2})` into `out`.
#[inline]
fn fill_candidate(word: &[u8], out: &mut [u8]) {
    out[1] = 1;
    let mut prev = 0usize;
    for &a in word {
        out[prev] = a - 1;
        prev = a as usize - 1;
    }
    out[prev] = 0;
}

/// Lazily streams the candidates for `n` in lexicographic word order,
/// optionally restricted to words starting with a fixed prefix.
#[derive(Debug, Clone)]
pub struct Candidates {
    n: usize,
    word: Vec<u8>,
    prefix_len: usize,
    started: bool,
    done: bool,
}

impl Candidates {
    /// Words starting with `prefix` (entries from `{3, ..., n}`, no repeats).
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Candidates {
        let mut word = prefix.to_vec();
        word.extend((3..=n as u8).filter(|a| !prefix.contains(a)));
        Candidates {
            n,
            word,
            prefix_len: prefix.len(),
            started: false,
            done: n < 3,
        }
    }

    /// Advances `word` to the next candidate; false when the block is exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let tail = &mut self.word[self.prefix_len..];
        let Some(i) = (1..tail.len()).rev().find(|&i| tail[i - 1] < tail[i]) else {
            self.done = true;
            return false;
        };
        let j = (i..tail.len())
            .rev()
            .find(|&j| tail[j] > tail[i - 1])
            .expect("pivot exists");
        tail.swap(i - 1, j);
        tail[i..].reverse();
        true
    }

    fn word(&self) -> &[u8] {
        &self.word
    }
}

impl Iterator for Candidates {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.advance() {
            Some(candidate_from_word(self.n, &self.word))
        } else {
            None
        }
    }
}

/// All `(n-2)!` candidates: `(n-1)`-cycles through 1 that fix 2.
pub fn candidates(n: usize) -> Candidates {
    Candidates::with_prefix(n, &[])
}

/// Whether `s2` is an `(n-1)`-cycle of degree `n` fixing 2.
pub fn satisfies_f1(s2: &Permutation, n: usize) -> bool {
    s2.degree() == n && n >= 3 && s2.apply(2) == 2 && s2.is_full_cycle_minus_one()
}

/// Both sides of the necessary condition for a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    /// The exponent with `s1^m(2) = s2(1)`, in `1..=n-2`.
    pub m: usize,
    /// `s1^m s2 s1^-m`
    pub shifted: Permutation,
    /// `s2 s1 s2^-1`
    pub swapped: Permutation,
}

impl LemmaCheck {
    pub fn passes(&self) -> bool {
        self.shifted == self.swapped
    }
}

/// Evaluates the necessary condition on a candidate `s2` (which must satisfy F1).
pub fn lemma_check(s2: &Permutation, n: usize) -> Result<LemmaCheck, ClassifyError> {
    if !satisfies_f1(s2, n) {
        return Err(ClassifyError::NotF1(s2.format_cycles()));
    }
    let s1 = base_cycle(n)?;
    // s1^m(2) = m + 2
    let m = s2.apply(1) - 2;
    let shifted = s1.pow(m as i64).conj(s2);
    let swapped = s2.conj(&s1);
    Ok(LemmaCheck {
        m,
        shifted,
        swapped,
    })
}

/// `false` means `s2` is certainly not in `F_n`; `true` decides nothing.
pub fn lemma_filter(s2: &Permutation, n: usize) -> bool {
    lemma_check(s2, n).map(|c| c.passes()).unwrap_or(false)
}

/// The lemma on raw 0-based images, without allocating.
/// `lhs` and `rhs` are scratch buffers of length `n`.
#[inline]
fn lemma_passes_raw(s2: &[u8], lhs: &mut [u8], rhs: &mut [u8]) -> bool {
    let n = s2.len();
    let cyc = n - 1;
    // 0-based: s1 fixes 0 and sends i to i + 1 on 1..n-1 cyclically.
    let m = s2[0] as usize - 1;
    let s1_pow = |x: usize| if x == 0 { 0 } else { (x - 1 + m) % cyc + 1 };
    let s1 = |x: usize| if x == 0 { 0 } else { x % cyc + 1 };
    for a in 0..n {
        let sa = s2[a] as usize;
        lhs[s1_pow(a)] = s1_pow(sa) as u8;
        rhs[sa] = s2[s1(a)];
    }
    lhs == rhs
}

/// The full conjugate-set equality, for a candidate `s2`.
pub fn satisfies_f2(s2: &Permutation, n: usize) -> bool {
    if !satisfies_f1(s2, n) {
        return false;
    }
    let s1 = base_cycle(n).expect("n >= 3");
    f2_holds(&s1, s2)
}

fn f2_holds(s1: &Permutation, s2: &Permutation) -> bool {
    let len = s1.degree() - 2;
    let mut from_s2 = conjugate_chain(s2, s1, len);
    let mut from_s1 = conjugate_chain(s1, s2, len);
    from_s2.sort_unstable();
    from_s1.sort_unstable();
    from_s2 == from_s1
}

/// Counters collected during one enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub candidates: u64,
    pub filter_rejected: u64,
    pub full_rejected: u64,
}

impl SearchStats {
    fn merge(&mut self, other: &SearchStats) {
        self.candidates += other.candidates;
        self.filter_rejected += other.filter_rejected;
        self.full_rejected += other.full_rejected;
    }

    /// Candidates that survived the cheap filter.
    pub fn filter_passed(&self) -> u64 {
        self.candidates - self.filter_rejected
    }
}

/// `F_n` for one `n`, members in lexicographic order of their cycle word.
#[derive(Debug, Clone)]
pub struct ClassificationRow {
    pub n: usize,
    pub members: Vec<Permutation>,
    pub stats: SearchStats,
    pub elapsed: Duration,
}

impl ClassificationRow {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn member_strings(&self) -> Vec<String> {
        self.members
            .iter()
            .map(Permutation::format_cycles)
            .collect()
    }

    pub fn to_record(&self) -> RowRecord {
        RowRecord {
            n: self.n,
            count: self.count(),
            members: self.member_strings(),
            stats: self.stats,
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
    }

    /// One-line summary, e.g. `n=5 #F_n=2 members=(1 3 5 4),(1 4 3 5)`.
    pub fn summary_line(&self) -> String {
        if self.members.is_empty() {
            format!("n={} #F_n=0", self.n)
        } else {
            format!(
                "n={} #F_n={} members={}",
                self.n,
                self.count(),
                self.member_strings().join(",")
            )
        }
    }

    /// One row of the classification table.
    pub fn table_line(&self) -> String {
        let set = if self.members.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", self.member_strings().join(", "))
        };
        format!("{:>3}  {:>4}  {}", self.n, self.count(), set)
    }
}

/// Structured form of a [`ClassificationRow`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowRecord {
    pub n: usize,
    pub count: usize,
    pub members: Vec<String>,
    pub stats: SearchStats,
    pub elapsed_ms: u64,
}

/// Header for [`ClassificationRow::table_line`] rows.
pub const TABLE_HEADER: &str = "  n  #F_n  F_n";

/// Renders rows as the plain-text classification table.
pub fn format_table(rows: &[ClassificationRow]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.table_line());
        out.push('\n');
    }
    out
}

/// Default worker count: the available parallelism.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `f` on a dedicated pool of `workers` threads; `workers <= 1` runs inline.
pub(crate) fn with_workers<T: Send>(
    workers: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, ClassifyError> {
    if workers <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| ClassifyError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// All ordered prefixes of length `k` over `{3, ..., n}`, in lexicographic order.
fn prefixes(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .iter()
            .flat_map(|p| {
                (3..=n as u8).filter(|a| !p.contains(a)).map(|a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

/// Scans one lexicographic block of candidates.
fn scan_block(n: usize, prefix: &[u8]) -> (Vec<Permutation>, SearchStats) {
    let s1 = base_cycle(n).expect("n >= 3");
    let mut stats = SearchStats::default();
    let mut members = Vec::new();
    let mut images = vec![0u8; n];
    let mut lhs = vec![0u8; n];
    let mut rhs = vec![0u8; n];
    let mut block = Candidates::with_prefix(n, prefix);
    while block.advance() {
        stats.candidates += 1;
        fill_candidate(block.word(), &mut images);
        if !lemma_passes_raw(&images, &mut lhs, &mut rhs) {
            stats.filter_rejected += 1;
            continue;
        }
        let s2 = Permutation::from_raw(images.clone());
        if f2_holds(&s1, &s2) {
            members.push(s2);
        } else {
            stats.full_rejected += 1;
        }
    }
    (members, stats)
}

/// Sort key: the cycle word read from 1.
fn word_key(p: &Permutation) -> Vec<usize> {
    p.cycles().into_iter().flatten().collect()
}

pub fn enumerate_fn(n: usize) -> Result<ClassificationRow, ClassifyError> {
    enumerate_fn_with(n, default_workers())
}

/// Enumerates `F_n` with the candidate space split into lexicographic blocks
/// by the first letters of the word. The result does not depend on `workers`.
pub fn enumerate_fn_with(n: usize, workers: usize) -> Result<ClassificationRow, ClassifyError> {
    check_n(n)?;
    if n > MAX_ENUMERATION_DEGREE {
        return Err(ClassifyError::TooLarge(n));
    }
    let start = Instant::now();
    let blocks = prefixes(n, (n - 2).min(2));
    let results = with_workers(workers, || {
        if workers <= 1 {
            blocks.iter().map(|p| scan_block(n, p)).collect::<Vec<_>>()
        } else {
            blocks
                .par_iter()
                .map(|p| scan_block(n, p))
                .collect::<Vec<_>>()
        }
    })?;
    let mut members = Vec::new();
    let mut stats = SearchStats::default();
    for (found, block_stats) in results {
        members.extend(found);
        stats.merge(&block_stats);
    }
    members.sort_by_cached_key(word_key);
    Ok(ClassificationRow {
        n,
        members,
        stats,
        elapsed: start.elapsed(),
    })
}

/// The quandle attached to `s2 ∈ F_n`: translations `s1`, `s2`, and
/// `s1^(i-2) s2 s1^-(i-2)` at `i = 3..=n`.
pub fn phi(s2: &Permutation, n: usize) -> Result<Quandle, ClassifyError> {
    check_n(n)?;
    if s2.degree() != n {
        return Err(ClassifyError::DegreeMismatch {
            expected: n,
            got: s2.degree(),
        });
    }
    if !satisfies_f1(s2, n) {
        return Err(ClassifyError::NotF1(s2.format_cycles()));
    }
    let s1 = base_cycle(n)?;
    if !f2_holds(&s1, s2) {
        return Err(ClassifyError::NotF2(s2.format_cycles()));
    }
    let mut maps = Vec::with_capacity(n);
    maps.push(s1.clone());
    maps.push(s2.clone());
    maps.extend(conjugate_chain(&s1, s2, n - 2));
    Ok(Quandle::from_translations(maps)?)
}

pub fn classification_table(
    n_min: usize,
    n_max: usize,
) -> Result<Vec<ClassificationRow>, ClassifyError> {
    classification_table_with(n_min, n_max, default_workers())
}

pub fn classification_table_with(
    n_min: usize,
    n_max: usize,
    workers: usize,
) -> Result<Vec<ClassificationRow>, ClassifyError> {
    check_n(n_min)?;
    if n_max < n_min {
        return Err(ClassifyError::BadRange(n_min, n_max));
    }
    (n_min..=n_max)
        .map(|n| enumerate_fn_with(n, workers))
        .collect()
}

/// Trial factorization.
pub fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureEntry {
    pub n: usize,
    pub prime_power: bool,
    pub count: usize,
    pub nonempty: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub entries: Vec<ConjectureEntry>,
    pub all_consistent: bool,
}

impl ConjectureReport {
    pub fn to_text(&self) -> String {
        let mut out = String::from("  n  prime_power  #F_n  consistent\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{:>3}  {:>11}  {:>4}  {}\n",
                e.n,
                if e.prime_power { "yes" } else { "no" },
                e.count,
                if e.consistent { "yes" } else { "NO" }
            ));
        }
        out.push_str(if self.all_consistent {
            "agreement at every n\n"
        } else {
            "disagreement found\n"
        });
        out
    }
}

/// Compares "n is a prime power" with "F_n is nonempty" for each n.
/// A disagreement is reported, never raised.
pub fn prime_power_consistency(
    n_min: usize,
    n_max: usize,
) -> Result<ConjectureReport, ClassifyError> {
    prime_power_consistency_with(n_min, n_max, default_workers())
}

pub fn prime_power_consistency_with(
    n_min: usize,
    n_max: usize,
    workers: usize,
) -> Result<ConjectureReport, ClassifyError> {
    let rows = classification_table_with(n_min, n_max, workers)?;
    let entries: Vec<ConjectureEntry> = rows
        .iter()
        .map(|row| {
            let prime_power = is_prime_power(row.n);
            let nonempty = row.count() > 0;
            ConjectureEntry {
                n: row.n,
                prime_power,
                count: row.count(),
                nonempty,
                consistent: prime_power == nonempty,
            }
        })
        .collect();
    let all_consistent = entries.iter().all(|e| e.consistent);
    Ok(ConjectureReport {
        entries,
        all_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{check_e_conditions, is_cyclic_type, quandle_from_sigma, sigma_from_pair};

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    /// F2 from the definition: powers and explicit inverses, no chains.
    fn f2_by_powers(s2: &Permutation, n: usize) -> bool {
        let s1 = base_cycle(n).unwrap();
        let side = |a: &Permutation, b: &Permutation| {
            let mut v: Vec<Permutation> = (1..=(n as i64 - 2))
                .map(|m| a.pow(m).compose(b).unwrap().compose(&a.pow(-m)).unwrap())
                .collect();
            v.sort();
            v.dedup();
            v
        };
        s2.apply(2) == 2 && s2.is_full_cycle_minus_one() && side(s2, &s1) == side(&s1, s2)
    }

    #[test]
    fn base_cycles() {
        assert_eq!(base_cycle(4).unwrap(), p("(234)", 4));
        assert_eq!(base_cycle(3).unwrap(), p("(23)", 3));
        assert_eq!(base_cycle(7).unwrap(), p("(234567)", 7));
        assert_eq!(base_cycle(2), Err(ClassifyError::TooSmall(2)));
    }

    #[test]
    fn candidate_streams() {
        let c3: Vec<_> = candidates(3).collect();
        assert_eq!(c3, vec![p("(13)", 3)]);
        let c4: Vec<_> = candidates(4).map(|c| c.format_cycles()).collect();
        assert_eq!(c4, vec!["(1 3 4)", "(1 4 3)"]);
        let c5: Vec<_> = candidates(5).map(|c| c.format_cycles()).collect();
        assert_eq!(
            c5,
            vec![
                "(1 3 4 5)",
                "(1 3 5 4)",
                "(1 4 3 5)",
                "(1 4 5 3)",
                "(1 5 3 4)",
                "(1 5 4 3)"
            ]
        );
        for n in 3..=8 {
            let all: Vec<_> = candidates(n).collect();
            let expected: usize = (1..=n - 2).product();
            assert_eq!(all.len(), expected);
            assert!(all.iter().all(|c| satisfies_f1(c, n)));
            let keys: Vec<_> = all.iter().map(word_key).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
        let block: Vec<_> = Candidates::with_prefix(5, &[4])
            .map(|c| c.format_cycles())
            .collect();
        assert_eq!(block, vec!["(1 4 3 5)", "(1 4 5 3)"]);
    }

    #[test]
    fn lemma_examples() {
        let c = lemma_check(&p("(1345)", 5), 5).unwrap();
        assert_eq!(
            (c.m, c.shifted.clone(), c.swapped.clone()),
            (1, p("(1452)", 5), p("(1245)", 5))
        );
        assert!(!c.passes());

        let c = lemma_check(&p("(1453)", 5), 5).unwrap();
        assert_eq!(
            (c.m, c.shifted.clone(), c.swapped.clone()),
            (2, p("(1235)", 5), p("(1532)", 5))
        );

        let c = lemma_check(&p("(1543)", 5), 5).unwrap();
        assert_eq!(
            (c.m, c.shifted.clone(), c.swapped.clone()),
            (3, p("(1432)", 5), p("(1342)", 5))
        );

        let c = lemma_check(&p("(1534)", 5), 5).unwrap();
        assert_eq!(
            (c.m, c.shifted.clone(), c.swapped.clone()),
            (3, p("(1423)", 5), p("(1324)", 5))
        );

        assert!(lemma_filter(&p("(1354)", 5), 5));
        assert!(lemma_filter(&p("(1435)", 5), 5));
        assert!(!lemma_filter(&p("(2345)", 5), 5));
        assert!(lemma_check(&p("(12345)", 5), 5).is_err());
    }

    #[test]
    fn raw_kernel_matches_lemma_check() {
        let mut lhs = [0u8; 9];
        let mut rhs = [0u8; 9];
        for n in 3..=9 {
            for c in candidates(n) {
                let raw = lemma_passes_raw(c.raw(), &mut lhs[..n], &mut rhs[..n]);
                assert_eq!(raw, lemma_filter(&c, n), "{c:?}");
            }
        }
    }

    #[test]
    fn f2_examples() {
        assert!(satisfies_f2(&p("(143)", 4), 4));
        assert!(!satisfies_f2(&p("(134)", 4), 4));
        assert!(satisfies_f2(&p("(13)", 3), 3));
        let s1 = base_cycle(4).unwrap();
        let (left, right) = crate::cyclic::e2_sides(&s1, &p("(143)", 4));
        let mut expected = vec![p("(124)", 4), p("(132)", 4)];
        expected.sort();
        assert_eq!(left, expected);
        assert_eq!(right, expected);
        let (left, _) = crate::cyclic::e2_sides(&s1, &p("(134)", 4));
        assert!(!left.contains(&p("(124)", 4)));
        let mut expected = vec![p("(142)", 4), p("(123)", 4)];
        expected.sort();
        assert_eq!(left, expected);
    }

    #[test]
    fn f2_agrees_with_power_definition_and_e_conditions() {
        for n in 3..=8 {
            let s1 = base_cycle(n).unwrap();
            for c in candidates(n) {
                let expected = f2_by_powers(&c, n);
                assert_eq!(satisfies_f2(&c, n), expected, "{c:?}");
                assert_eq!(check_e_conditions(&s1, &c), expected);
            }
        }
    }

    #[test]
    fn filter_never_rejects_members() {
        for n in 3..=9 {
            for c in candidates(n) {
                if satisfies_f2(&c, n) {
                    assert!(lemma_filter(&c, n), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let row = enumerate_fn_with(5, 1).unwrap();
        assert_eq!(row.member_strings(), vec!["(1 3 5 4)", "(1 4 3 5)"]);
        assert_eq!(row.stats.candidates, 6);
        assert_eq!(row.stats.filter_rejected, 4);
        assert_eq!(row.stats.full_rejected, 0);
        assert_eq!(row.summary_line(), "n=5 #F_n=2 members=(1 3 5 4),(1 4 3 5)");
        assert_eq!(
            enumerate_fn_with(6, 2).unwrap().summary_line(),
            "n=6 #F_n=0"
        );
        assert_eq!(
            enumerate_fn_with(3, 1).unwrap().member_strings(),
            vec!["(1 3)"]
        );
        assert_eq!(
            enumerate_fn_with(4, 3).unwrap().member_strings(),
            vec!["(1 4 3)"]
        );
        assert_eq!(
            enumerate_fn_with(2, 1).unwrap_err(),
            ClassifyError::TooSmall(2)
        );
    }

    #[test]
    fn worker_count_does_not_change_output() {
        for n in 3..=9 {
            let serial = enumerate_fn_with(n, 1).unwrap();
            for w in [2, 3, 8] {
                let par = enumerate_fn_with(n, w).unwrap();
                assert_eq!(par.members, serial.members);
                assert_eq!(par.stats, serial.stats);
            }
        }
    }

    #[test]
    fn phi_examples() {
        let t = phi(&p("(143)", 4), 4).unwrap();
        assert_eq!(t, Quandle::tetrahedron());
        assert_eq!(
            phi(&p("(13)", 3), 3).unwrap(),
            Quandle::dihedral(3).unwrap()
        );
        let q = phi(&p("(1354)", 5), 5).unwrap();
        assert_eq!(is_cyclic_type(&q), Ok(true));
        assert!(Quandle::from_translations(q.translations().to_vec()).is_ok());

        assert_eq!(
            phi(&p("(134)", 4), 4),
            Err(ClassifyError::NotF2("(1 3 4)".into()))
        );
        assert_eq!(
            phi(&p("(234)", 4), 4),
            Err(ClassifyError::NotF1("(2 3 4)".into()))
        );
        assert_eq!(
            phi(&p("(13)(24)", 4), 4),
            Err(ClassifyError::NotF1("(1 3)(2 4)".into()))
        );
        assert!(matches!(
            phi(&p("(143)", 5), 4),
            Err(ClassifyError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn phi_matches_sigma_route() {
        for n in 3..=9 {
            let s1 = base_cycle(n).unwrap();
            for s2 in enumerate_fn_with(n, 1).unwrap().members {
                let direct = phi(&s2, n).unwrap();
                let via = quandle_from_sigma(&sigma_from_pair(&s1, &s2).unwrap()).unwrap();
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<usize> = (1..=32).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }

    #[test]
    fn conjecture_small_range() {
        let report = prime_power_consistency_with(3, 8, 1).unwrap();
        assert!(report.all_consistent);
        let six = report.entries.iter().find(|e| e.n == 6).unwrap();
        assert_eq!((six.prime_power, six.nonempty), (false, false));
        let four = report.entries.iter().find(|e| e.n == 4).unwrap();
        assert_eq!((four.prime_power, four.nonempty), (true, true));
        assert!(classification_table_with(5, 4, 1).is_err());
    }
}
