//! Permutations of `{1, ..., n}`.
//!
//! Points are 1-based everywhere in the public API and in cycle notation.
//! Internally images are stored 0-based as bytes, so the degree is capped at
//! [`MAX_DEGREE`].

use std::fmt;

use thiserror::Error;

/// Largest supported degree.
pub const MAX_DEGREE: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} is outside 1..={max}", max = MAX_DEGREE)]
    BadDegree(usize),
    #[error("image list is not a bijection of 1..={0}")]
    NotBijective(usize),
    #[error("point {point} is out of range 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
}

/// A bijection of `{1, ..., n}`.
///
/// Ordering and hashing follow the image array, which is what set comparisons
/// in the rest of the crate rely on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[x - 1]` is the image of `x`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &y in images {
            if y == 0 || y > n || seen[y - 1] {
                return Err(PermError::NotBijective(n));
            }
            seen[y - 1] = true;
            out.push((y - 1) as u8);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint 1-based cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, PermError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        let mut images: Vec<u8> = (0..n).map(|i| i as u8).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(PermError::OutOfRange { point: p, n });
                }
                if seen[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                seen[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    ///
    /// Panics if `x` is outside `1..=n`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 0-based image lookup.
    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    #[cfg(test)]
    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    /// The 1-based image list `[p(1), ..., p(n)]`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| i == y as usize)
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&y| self.images[y as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y as usize] = i as u8;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self` composed with itself `m` times; negative `m` powers the inverse.
    pub fn pow(&self, m: i64) -> Permutation {
        let n = self.degree();
        let mut out = vec![0u8; n];
        let mut done = vec![false; n];
        let mut cycle = Vec::with_capacity(n);
        for start in 0..n {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x);
                x = self.images[x] as usize;
            }
            let len = cycle.len() as i64;
            let shift = m.rem_euclid(len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                out[x] = cycle[(i + shift) % cycle.len()] as u8;
            }
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `self ∘ p ∘ self⁻¹`. In cycle notation this relabels every entry `a` of
    /// `p` by `self(a)`.
    pub fn conjugate(&self, p: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(p)?;
        Ok(self.conj(p))
    }

    pub(crate) fn conj(&self, p: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), p.degree());
        let mut out = vec![0u8; self.degree()];
        for (a, &pa) in p.images.iter().enumerate() {
            out[self.images[a] as usize] = self.images[pa as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// All points `x` with `p(x) = x`, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &y)| i == y as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Membership in `(S_n)_{n-1}`: one fixed point, the other `n - 1` points
    /// forming a single cycle.
    pub fn is_full_cycle_minus_one(&self) -> bool {
        let n = self.degree();
        if n < 3 {
            return false;
        }
        let fixed: Vec<usize> = (0..n).filter(|&i| self.at(i) == i).collect();
        if fixed.len() != 1 {
            return false;
        }
        let start = if fixed[0] == 0 { 1 } else { 0 };
        let mut len = 1;
        let mut x = self.at(start);
        while x != start {
            len += 1;
            x = self.at(x);
        }
        len == n - 1
    }

    /// Disjoint nontrivial cycles, each starting at its minimum point, sorted
    /// by that minimum. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] || self.at(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x + 1);
                x = self.at(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Parses disjoint cycles such as `"(1 7 4 6 5 3)"`, `"(234)"` or
    /// `"(1 2)(3 4)"`. A run of digits with no whitespace inside a cycle is
    /// read one digit per point, which only makes sense for `n <= 9`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation, PermError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut i = 0;
        let malformed = |pos: usize, msg: &str| PermError::Malformed {
            pos,
            msg: msg.to_string(),
        };
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'(' => {
                    if current.is_some() {
                        return Err(malformed(i, "nested '('"));
                    }
                    current = Some(Vec::new());
                    i += 1;
                }
                b')' => {
                    let cycle = current
                        .take()
                        .ok_or_else(|| malformed(i, "unmatched ')'"))?;
                    cycles.push(cycle);
                    i += 1;
                }
                b',' | b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'0'..=b'9' => {
                    let cycle = current
                        .as_mut()
                        .ok_or_else(|| malformed(i, "point outside parentheses"))?;
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let run = &text[start..i];
                    // "(234)" style: compact single-digit cycle words.
                    let spaced = cycle_is_spaced(bytes, start);
                    if !spaced && run.len() > 1 && n <= 9 {
                        cycle.extend(run.bytes().map(|d| (d - b'0') as usize));
                    } else {
                        let p: usize = run.parse().map_err(|_| malformed(start, "bad number"))?;
                        cycle.push(p);
                    }
                }
                _ => return Err(malformed(i, "unexpected character")),
            }
        }
        if current.is_some() {
            return Err(malformed(bytes.len(), "unterminated cycle"));
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Canonical cycle notation, e.g. `"(1 3 5 4)"`; the identity prints as `"()"`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for c in cycles {
            out.push('(');
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
            }
            out.push(')');
        }
        out
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }
}

/// Whether the cycle containing byte offset `at` separates its points with
/// whitespace or commas.
fn cycle_is_spaced(bytes: &[u8], at: usize) -> bool {
    let open = bytes[..at].iter().rposition(|&b| b == b'(').unwrap_or(0);
    let close = bytes[at..]
        .iter()
        .position(|&b| b == b')')
        .map_or(bytes.len(), |p| at + p);
    bytes[open..close]
        .iter()
        .any(|b| matches!(b, b' ' | b'\t' | b',' | b'\n' | b'\r'))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self.format_cycles(), self.degree())
    }
}
