//! Braid words for weaving links, all-A smoothing statistics, and the
//! combinatorial signature of alternating links.
//!
//! For an oriented non-split alternating link with reduced alternating
//! diagram D, the signature is σ = o(D) − y(D) − 1, where y counts positive
//! crossings and o counts the circles of the diagram obtained by
//! A-smoothing every crossing. For the standard weaving diagrams this
//! evaluates in closed form: σ(W(2k+1,q)) = 0 and σ(W(2k,q)) = −q+1.
//!
//! Circles are counted by union-find over the strand segments of the braid,
//! with the closure identifications; no planar embedding is needed.

use serde_json::json;

/// One crossing in a braid word: generator σ_index with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    /// Generator index, 1-based: σ_i crosses strands i and i+1.
    pub index: u32,
    /// True for σ_i, false for σ_i⁻¹.
    pub positive: bool,
}

/// A word in the braid group B_p, read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<BraidLetter>) -> Self {
        assert!(strands >= 2, "a braid needs at least two strands");
        for l in &letters {
            assert!(
                l.index >= 1 && l.index < strands,
                "generator index {} out of range for {} strands",
                l.index,
                strands
            );
        }
        Self { strands, letters }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1i64 } else { -1 })
            .sum()
    }

    /// Cyclic rotation by `k` letters; the closure is unchanged.
    pub fn rotate(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Whether the standard closed diagram of this word is alternating.
    ///
    /// The weaving words on p ≥ 3 strands alternate signs between adjacent
    /// generator rings; the p = 2 words (all crossings of one sign) do not
    /// make an alternating diagram in that sense, so the signature formula
    /// is reported rather than asserted for them.
    pub fn is_alternating(&self) -> bool {
        let has_pos = self.letters.iter().any(|l| l.positive);
        let has_neg = self.letters.iter().any(|l| !l.positive);
        has_pos && has_neg
    }
}

/// Crossing and all-A-smoothing circle counts of a braid closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmoothingStats {
    /// Total crossings c = x + y.
    pub crossings: u64,
    /// Negative crossings x.
    pub negative: u64,
    /// Positive crossings y.
    pub positive: u64,
    /// Circles o of the all-A smoothing of the closure.
    pub circles: u64,
}

/// The weaving braid word (σ₁ σ₂⁻¹ σ₃ ⋯ σ_{p−1}^{±1})^q whose closure is
/// W(p,q): signs alternate along the generators, starting positive.
pub fn weaving_braid(p: u32, q: u32) -> BraidWord {
    assert!(p >= 2 && q >= 1, "weaving_braid requires p >= 2, q >= 1");
    let period: Vec<BraidLetter> = (1..p)
        .map(|i| BraidLetter {
            index: i,
            positive: i % 2 == 1,
        })
        .collect();
    let mut letters = Vec::with_capacity(period.len() * q as usize);
    for _ in 0..q {
        letters.extend_from_slice(&period);
    }
    BraidWord::new(p, letters)
}

/// Minimal union-find over `0..n`, path-halving with union by size.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }

    pub fn count_roots(&mut self) -> usize {
        (0..self.parent.len() as u32)
            .filter(|&x| self.parent[x as usize] == x)
            .count()
    }
}

/// Connect the strand points across one smoothed crossing.
///
/// `identity` keeps both strands going straight; otherwise the crossing is
/// replaced by the cap-cup (Temperley–Lieb) pattern joining the two
/// incoming strands to each other and the two outgoing strands to each
/// other.
pub(crate) fn smooth_slice(
    uf: &mut UnionFind,
    strands: u32,
    slice: usize,
    index: u32,
    identity: bool,
) {
    let node = |s: u32, t: usize| t as u32 * strands + (s - 1);
    let t = slice;
    if identity {
        uf.union(node(index, t), node(index, t + 1));
        uf.union(node(index + 1, t), node(index + 1, t + 1));
    } else {
        uf.union(node(index, t), node(index + 1, t));
        uf.union(node(index, t + 1), node(index + 1, t + 1));
    }
    for s in 1..=strands {
        if s != index && s != index + 1 {
            uf.union(node(s, t), node(s, t + 1));
        }
    }
}

/// Crossing counts and the circle count of the all-A smoothing.
///
/// The A-smoothing of a positive crossing is the identity pattern and of a
/// negative crossing the cap-cup pattern; the assignment is validated
/// wholesale by reproducing the closed-form circle counts o(W(2k+1,q)) =
/// 1 + kq and o(W(2k,q)) = (k−1)q + 2.
pub fn smooth_stats(word: &BraidWord) -> SmoothingStats {
    let strands = word.strands();
    let len = word.letters().len();
    let mut uf = UnionFind::new(strands as usize * (len + 1));
    let mut positive = 0u64;
    for (t, l) in word.letters().iter().enumerate() {
        if l.positive {
            positive += 1;
        }
        smooth_slice(&mut uf, strands, t, l.index, l.positive);
    }
    // closure arcs
    let node = |s: u32, t: usize| t as u32 * strands + (s - 1);
    for s in 1..=strands {
        uf.union(node(s, len), node(s, 0));
    }
    SmoothingStats {
        crossings: len as u64,
        negative: len as u64 - positive,
        positive,
        circles: uf.count_roots() as u64,
    }
}

/// Signature of the closure via σ = o − y − 1.
///
/// Caller's contract: the closure of `word` is a reduced alternating diagram
/// of a non-split alternating link (true for weaving words with p ≥ 3).
pub fn signature_alternating(word: &BraidWord) -> i64 {
    let stats = smooth_stats(word);
    stats.circles as i64 - stats.positive as i64 - 1
}

/// Closed-form signature of W(p,q): zero for odd p, −q+1 for even p.
pub fn signature_closed_form(p: u32, q: u32) -> i64 {
    assert!(p >= 2 && q >= 1);
    if p % 2 == 1 {
        0
    } else {
        1 - q as i64
    }
}

/// JSON report for a weaving word: counts, both signature routes, and
/// whether they agree.
pub fn signature_report(p: u32, q: u32) -> serde_json::Value {
    let word = weaving_braid(p, q);
    let stats = smooth_stats(&word);
    let sig = signature_alternating(&word);
    let closed = signature_closed_form(p, q);
    json!({
        "p": p,
        "q": q,
        "c": stats.crossings,
        "x": stats.negative,
        "y": stats.positive,
        "o": stats.circles,
        "signature": sig,
        "closed_form": closed,
        "agree": sig == closed,
        "alternating": word.is_alternating(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weaving_word_shapes() {
        let w = weaving_braid(3, 4);
        assert_eq!(w.letters().len(), 8);
        for (k, l) in w.letters().iter().enumerate() {
            if k % 2 == 0 {
                assert_eq!((l.index, l.positive), (1, true));
            } else {
                assert_eq!((l.index, l.positive), (2, false));
            }
        }

        let w = weaving_braid(2, 3);
        assert_eq!(w.letters().len(), 3);
        assert!(w.letters().iter().all(|l| l.index == 1 && l.positive));
        assert!(!w.is_alternating());

        let w = weaving_braid(4, 5);
        assert_eq!(w.letters().len(), 15);
        let signs: Vec<bool> = w.letters()[..3].iter().map(|l| l.positive).collect();
        assert_eq!(signs, [true, false, true]);
        assert!(w.is_alternating());
    }

    #[test]
    fn smoothing_counts() {
        let s = smooth_stats(&weaving_braid(3, 4));
        assert_eq!(
            (s.circles, s.positive, s.negative, s.crossings),
            (5, 4, 4, 8)
        );
        // W(5,7): p = 2k+1 with k = 2, o = 1 + kq
        let s = smooth_stats(&weaving_braid(5, 7));
        assert_eq!(s.circles, 15);
        // W(4,5): p = 2k with k = 2, o = (k-1)q + 2
        let s = smooth_stats(&weaving_braid(4, 5));
        assert_eq!(s.circles, 7);
        assert_eq!((s.positive, s.negative), (10, 5));
    }

    #[test]
    fn signatures_match_closed_form() {
        for q in 1..=12 {
            assert_eq!(signature_alternating(&weaving_braid(3, q)), 0);
        }
        assert_eq!(signature_alternating(&weaving_braid(4, 5)), -4);
        assert_eq!(signature_closed_form(3, 10), 0);
        assert_eq!(signature_closed_form(4, 5), -4);
        assert_eq!(signature_closed_form(6, 7), -6);
    }

    #[test]
    fn two_strand_word_agrees_with_closed_form() {
        // all-A smoothing of (σ₁)^q keeps two parallel strands: o = 2
        let w = weaving_braid(2, 3);
        let s = smooth_stats(&w);
        assert_eq!((s.circles, s.positive), (2, 3));
        assert_eq!(signature_alternating(&w), -2);
        assert_eq!(signature_closed_form(2, 3), -2);
    }

    #[test]
    fn crossing_count_formula() {
        for p in 2..=8 {
            for q in 1..=10 {
                let s = smooth_stats(&weaving_braid(p, q));
                assert_eq!(s.crossings, ((p - 1) * q) as u64);
                assert_eq!(s.crossings, s.positive + s.negative);
            }
        }
    }

    #[test]
    fn circle_count_closed_forms() {
        for q in 1..=10u32 {
            for k in 1..=3u32 {
                let odd = smooth_stats(&weaving_braid(2 * k + 1, q));
                assert_eq!(odd.circles, (1 + k * q) as u64);
                assert_eq!(odd.positive, (k * q) as u64);
                assert_eq!(odd.negative, (k * q) as u64);
                let even = smooth_stats(&weaving_braid(2 * k, q));
                assert_eq!(even.circles, ((k - 1) * q + 2) as u64);
                assert_eq!(even.positive, (k * q) as u64);
                assert_eq!(even.negative, ((k - 1) * q) as u64);
            }
        }
    }

    #[test]
    fn circle_count_rotation_invariant() {
        let w = weaving_braid(5, 6);
        let base = smooth_stats(&w).circles;
        for k in 0..w.letters().len() {
            assert_eq!(smooth_stats(&w.rotate(k)).circles, base);
        }
    }

    #[test]
    fn diagram_vs_closed_form_sweep() {
        for p in 3..=8 {
            for q in 1..=20 {
                let w = weaving_braid(p, q);
                assert_eq!(
                    signature_alternating(&w),
                    signature_closed_form(p, q),
                    "p={p} q={q}"
                );
            }
        }
    }
}
