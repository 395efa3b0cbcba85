//! Finite quandles given by their right translations `s_x : y ↦ y ∗ x`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Default cap on the number of elements [`Quandle::inner_group`] may materialize.
pub const DEFAULT_GROUP_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("a quandle needs at least one point")]
    Empty,
    #[error("expected {n} translations, got {got}")]
    CountMismatch { n: usize, got: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("axiom S1 fails at x = {x}: s_x(x) != x")]
    S1 { x: usize },
    #[error("axiom S3 fails at (x, y) = ({x}, {y}): s_x s_y != s_(s_x(y)) s_x")]
    S3 { x: usize, y: usize },
    #[error("{what} needs n >= {min}, got {n}")]
    BadCardinality {
        what: &'static str,
        min: usize,
        n: usize,
    },
    #[error("point {point} is out of range 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("inner group exceeds the budget of {budget} elements")]
    GroupBudget { budget: usize },
    #[error("line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
}

/// A validated finite quandle on `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quandle {
    s: Vec<Permutation>,
}

impl std::fmt::Debug for Quandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.s.iter()).finish()
    }
}

impl Quandle {
    /// Validates the translations `maps[x - 1] = s_x` against S1 and S3.
    pub fn from_translations(maps: Vec<Permutation>) -> Result<Quandle, QuandleError> {
        let n = maps.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        for m in &maps {
            if m.degree() != n {
                return Err(QuandleError::CountMismatch {
                    n: m.degree(),
                    got: n,
                });
            }
        }
        for (x, sx) in maps.iter().enumerate() {
            if sx.at(x) != x {
                return Err(QuandleError::S1 { x: x + 1 });
            }
        }
        // s_x s_y s_x⁻¹ = s_(s_x(y)), compared pointwise: s_x(s_y(z)) = s_(s_x(y))(s_x(z)).
        for (x, sx) in maps.iter().enumerate() {
            for (y, sy) in maps.iter().enumerate() {
                let target = &maps[sx.at(y)];
                if (0..n).any(|z| sx.at(sy.at(z)) != target.at(sx.at(z))) {
                    return Err(QuandleError::S3 { x: x + 1, y: y + 1 });
                }
            }
        }
        Ok(Quandle { s: maps })
    }

    pub(crate) fn from_translations_unchecked(maps: Vec<Permutation>) -> Quandle {
        debug_assert!(Quandle::from_translations(maps.clone()).is_ok());
        Quandle { s: maps }
    }

    /// The trivial quandle: every `s_x` is the identity.
    pub fn trivial(n: usize) -> Result<Quandle, QuandleError> {
        if n == 0 {
            return Err(QuandleError::BadCardinality {
                what: "trivial quandle",
                min: 1,
                n,
            });
        }
        Ok(Quandle {
            s: vec![Permutation::identity(n); n],
        })
    }

    /// The dihedral quandle `s_i(j) = 2i - j (mod n)`, with `n` standing for residue 0.
    pub fn dihedral(n: usize) -> Result<Quandle, QuandleError> {
        if n < 3 {
            return Err(QuandleError::BadCardinality {
                what: "dihedral quandle",
                min: 3,
                n,
            });
        }
        let m = n as i64;
        let maps = (1..=m)
            .map(|i| {
                let images: Vec<usize> = (1..=m)
                    .map(|j| match (2 * i - j).rem_euclid(m) {
                        0 => n,
                        r => r as usize,
                    })
                    .collect();
                Permutation::from_images(&images)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Quandle::from_translations(maps)
    }

    /// The tetrahedron quandle: `(234), (143), (124), (132)`.
    pub fn tetrahedron() -> Quandle {
        let maps = ["(2 3 4)", "(1 4 3)", "(1 2 4)", "(1 3 2)"]
            .iter()
            .map(|c| Permutation::parse_cycles(c, 4).expect("static cycle"))
            .collect();
        Quandle::from_translations(maps).expect("tetrahedron is a quandle")
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.s.len()
    }

    /// The right translation `s_x`. Panics if `x` is out of range.
    pub fn translation(&self, x: usize) -> &Permutation {
        &self.s[x - 1]
    }

    pub fn translations(&self) -> &[Permutation] {
        &self.s
    }

    /// `y ∗ x = s_x(y)`.
    pub fn op(&self, y: usize, x: usize) -> Result<usize, QuandleError> {
        let n = self.size();
        for p in [x, y] {
            if p == 0 || p > n {
                return Err(QuandleError::OutOfRange { point: p, n });
            }
        }
        Ok(self.s[x - 1].apply(y))
    }

    /// The operation table; row `y`, column `x` holds `y ∗ x`.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (1..=n)
            .map(|y| (1..=n).map(|x| self.s[x - 1].apply(y)).collect())
            .collect()
    }

    /// Orbit of the 1-based point `x` under the group generated by the translations.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([x - 1]);
        seen[x - 1] = true;
        while let Some(p) = queue.pop_front() {
            for s in &self.s {
                let q = s.at(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        (0..n).filter(|&p| seen[p]).map(|p| p + 1).collect()
    }

    /// Whether `Inn(X)` acts transitively on `X`.
    pub fn is_connected(&self) -> bool {
        self.orbit(1).len() == self.size()
    }

    /// Whether `Inn(X)` acts transitively on ordered pairs of distinct points.
    /// Vacuously true for `n = 1`.
    pub fn is_two_point_homogeneous(&self) -> bool {
        let n = self.size();
        if n == 1 {
            return true;
        }
        // Pair (a, b) is encoded as a * n + b, 0-based.
        let mut seen = vec![false; n * n];
        let start = 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(code) = queue.pop_front() {
            let (a, b) = (code / n, code % n);
            for s in &self.s {
                let next = s.at(a) * n + s.at(b);
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    queue.push_back(next);
                }
            }
        }
        count == n * (n - 1)
    }

    pub fn inner_group(&self) -> Result<InnerGroup, QuandleError> {
        self.inner_group_with_budget(DEFAULT_GROUP_BUDGET)
    }

    /// Breadth-first closure of the translations under composition.
    pub fn inner_group_with_budget(&self, budget: usize) -> Result<InnerGroup, QuandleError> {
        let id = Permutation::identity(self.size());
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.s {
                let h = s.mul(&g);
                if !seen.contains(&h) {
                    if seen.len() >= budget {
                        return Err(QuandleError::GroupBudget { budget });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(InnerGroup { elements })
    }

    /// Serializes to the plain-text quandle file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.size());
        for s in &self.s {
            let row: Vec<String> = s.images().iter().map(|y| y.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_record(&self) -> QuandleRecord {
        QuandleRecord {
            n: self.size(),
            s: self.s.iter().map(Permutation::images).collect(),
        }
    }

    pub fn from_record(record: &QuandleRecord) -> Result<Quandle, QuandleError> {
        if record.s.len() != record.n {
            return Err(QuandleError::CountMismatch {
                n: record.n,
                got: record.s.len(),
            });
        }
        let maps = record
            .s
            .iter()
            .map(|row| {
                if row.len() != record.n {
                    return Err(QuandleError::CountMismatch {
                        n: record.n,
                        got: row.len(),
                    });
                }
                Ok(Permutation::from_images(row)?)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Quandle::from_translations(maps)
    }

    /// Parses the plain-text format: `n` on the first line, then one line of
    /// `n` images per translation.
    pub fn parse_text(text: &str) -> Result<Quandle, QuandleError> {
        let maps = parse_rows(text)?;
        Quandle::from_translations(maps)
    }

    /// Accepts either the plain-text format or the structured `{ "n", "s" }` record.
    pub fn parse_document(text: &str) -> Result<Quandle, QuandleError> {
        if text.trim_start().starts_with('{') {
            let record: QuandleRecord =
                serde_json::from_str(text).map_err(|e| QuandleError::Parse {
                    line: e.line(),
                    column: e.column(),
                    msg: e.to_string(),
                })?;
            Quandle::from_record(&record)
        } else {
            Quandle::parse_text(text)
        }
    }
}

fn parse_rows(text: &str) -> Result<Vec<Permutation>, QuandleError> {
    let err = |line: usize, column: usize, msg: String| QuandleError::Parse { line, column, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, 1, "empty document".into()))?;
    let hcol = header.len() - header.trim_start().len() + 1;
    let n: usize = header.trim().parse().map_err(|_| {
        err(
            hline,
            hcol,
            format!("expected the cardinality, found {:?}", header.trim()),
        )
    })?;
    if n == 0 || n > crate::perm::MAX_DEGREE {
        return Err(err(hline, hcol, format!("cardinality {n} out of range")));
    }

    let mut maps = Vec::with_capacity(n);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        if maps.len() == n {
            return Err(err(
                lineno,
                1,
                format!("unexpected row after {n} translations"),
            ));
        }
        let mut row = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for (column, token) in tokens(line) {
            let y: usize = token.parse().map_err(|_| {
                err(
                    lineno,
                    column,
                    format!("expected an integer, found {token:?}"),
                )
            })?;
            if y == 0 || y > n {
                return Err(err(
                    lineno,
                    column,
                    format!("image {y} out of range 1..={n}"),
                ));
            }
            if seen[y - 1] {
                return Err(err(
                    lineno,
                    column,
                    format!("image {y} repeated; row is not a bijection"),
                ));
            }
            seen[y - 1] = true;
            row.push(y);
        }
        if row.len() != n {
            return Err(err(
                lineno,
                line.len() + 1,
                format!("expected {n} images, found {}", row.len()),
            ));
        }
        maps.push(Permutation::from_images(&row)?);
    }
    if maps.len() != n {
        return Err(err(
            last_line + 1,
            1,
            format!("expected {n} rows, found {}", maps.len()),
        ));
    }
    Ok(maps)
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, tok)
    })
}

/// Structured mirror of the text format, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleRecord {
    pub n: usize,
    pub s: Vec<Vec<usize>>,
}

/// Materialized inner automorphism group, elements sorted by image array.
#[derive(Debug, Clone)]
pub struct InnerGroup {
    pub elements: Vec<Permutation>,
}

impl InnerGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Whether `f` satisfies `f ∘ s_x = s'_{f(x)} ∘ f` for every `x`.
pub fn is_homomorphism(f: &Permutation, from: &Quandle, to: &Quandle) -> bool {
    let n = from.size();
    if f.degree() != n || to.size() != n {
        return false;
    }
    (0..n).all(|x| {
        let sx = &from.s[x];
        let target = &to.s[f.at(x)];
        (0..n).all(|y| f.at(sx.at(y)) == target.at(f.at(y)))
    })
}

/// A bijection certifying `from ≅ to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: Permutation,
}

impl IsoWitness {
    pub fn verify(&self, from: &Quandle, to: &Quandle) -> bool {
        is_homomorphism(&self.map, from, to)
    }

    pub fn inverse(&self) -> IsoWitness {
        IsoWitness {
            map: self.map.inverse(),
        }
    }
}

/// Searches for an isomorphism `q1 → q2`.
///
/// Images are chosen for the smallest unassigned point in increasing order,
/// and each choice is propagated through `f(s_x(y)) = s'_{f(x)}(f(y))`. For a
/// connected quandle generated by two points this pins the whole map after the
/// first two choices; otherwise the search keeps branching. The first witness
/// found is the lexicographically least one.
///
/// Returns `None` when the cardinalities differ.
pub fn are_isomorphic(q1: &Quandle, q2: &Quandle) -> Option<IsoWitness> {
    let n = q1.size();
    if q2.size() != n {
        return None;
    }
    if q1.is_connected() != q2.is_connected() || cycle_profile(q1) != cycle_profile(q2) {
        return None;
    }
    let mut state = Partial {
        image: vec![UNSET; n],
        used: vec![false; n],
    };
    if !extend(q1, q2, &mut state) {
        return None;
    }
    let map = Permutation::from_raw(state.image.iter().map(|&v| v as u8).collect());
    debug_assert!(is_homomorphism(&map, q1, q2));
    Some(IsoWitness { map })
}

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct Partial {
    image: Vec<usize>,
    used: Vec<bool>,
}

/// Sorted cycle types of the translations, an isomorphism invariant.
fn cycle_profile(q: &Quandle) -> Vec<Vec<usize>> {
    let mut profile: Vec<Vec<usize>> =
        q.s.iter()
            .map(|s| {
                let mut lens: Vec<usize> = s.cycles().iter().map(Vec::len).collect();
                lens.sort_unstable();
                lens
            })
            .collect();
    profile.sort();
    profile
}

fn propagate(q1: &Quandle, q2: &Quandle, st: &mut Partial) -> bool {
    let n = q1.size();
    loop {
        let mut changed = false;
        for x in 0..n {
            let fx = st.image[x];
            if fx == UNSET {
                continue;
            }
            let (sx, tx) = (&q1.s[x], &q2.s[fx]);
            for y in 0..n {
                let fy = st.image[y];
                if fy == UNSET {
                    continue;
                }
                let z = sx.at(y);
                let w = tx.at(fy);
                match st.image[z] {
                    UNSET => {
                        if st.used[w] {
                            return false;
                        }
                        st.image[z] = w;
                        st.used[w] = true;
                        changed = true;
                    }
                    fz if fz != w => return false,
                    _ => {}
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn extend(q1: &Quandle, q2: &Quandle, st: &mut Partial) -> bool {
    if !propagate(q1, q2, st) {
        return false;
    }
    let Some(p) = st.image.iter().position(|&v| v == UNSET) else {
        return true;
    };
    for v in 0..q1.size() {
        if st.used[v] {
            continue;
        }
        let mut next = st.clone();
        next.image[p] = v;
        next.used[v] = true;
        if extend(q1, q2, &mut next) {
            *st = next;
            return true;
        }
    }
    false
}

/// Automorphisms of `q`, enumerated by the isomorphism search against itself.
pub fn automorphisms(q: &Quandle) -> Vec<Permutation> {
    let n = q.size();
    let mut out = Vec::new();
    let mut st = Partial {
        image: vec![UNSET; n],
        used: vec![false; n],
    };
    collect_all(q, q, &mut st, &mut out);
    out
}

fn collect_all(q1: &Quandle, q2: &Quandle, st: &mut Partial, out: &mut Vec<Permutation>) {
    if !propagate(q1, q2, st) {
        return;
    }
    let Some(p) = st.image.iter().position(|&v| v == UNSET) else {
        out.push(Permutation::from_raw(
            st.image.iter().map(|&v| v as u8).collect(),
        ));
        return;
    };
    for v in 0..q1.size() {
        if !st.used[v] {
            let mut next = st.clone();
            next.image[p] = v;
            next.used[v] = true;
            collect_all(q1, q2, &mut next, out);
        }
    }
}
