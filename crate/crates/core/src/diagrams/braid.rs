use std::fmt;

use serde::{Deserialize, Serialize};

use super::DiagramError;
use crate::exactmath::IntMatrix;
use crate::knot_invariants::SeifertMatrix;

/// Word in the Artin generators: letter ±i is σᵢ^{±1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::NoStrands);
        }
        for (index, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(DiagramError::ZeroLetter { index });
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(DiagramError::LetterRange { index, letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn concat(&self, other: &Self) -> Result<Self, DiagramError> {
        let n = self.strands.max(other.strands);
        Self::new(n, self.letters.iter().chain(&other.letters).copied().collect())
    }

    /// Cycle lengths of the underlying permutation.
    fn cycles(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for s in 0..self.strands {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            strands: usize,
            letters: Vec<i64>,
        }
        let r = Raw::deserialize(d)?;
        BraidWord::new(r.strands, r.letters).map_err(serde::de::Error::custom)
    }
}

/// Whitespace-separated signed integers; n = max|letter| + 1.
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    parse_braid_with_strands(text, None)
}

pub fn parse_braid_with_strands(text: &str, strands: Option<usize>) -> Result<BraidWord, DiagramError> {
    let mut letters = Vec::new();
    for (k, tok) in text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).enumerate() {
        let token = k + 1;
        let l: i64 = tok.parse().map_err(|_| DiagramError::Parse { token, message: format!("'{tok}' is not an integer") })?;
        if l == 0 {
            return Err(DiagramError::Parse { token, message: "zero is not a generator".into() });
        }
        if let Some(n) = strands {
            if l.unsigned_abs() as usize >= n {
                return Err(DiagramError::Parse { token, message: format!("|{l}| needs at most {} on {n} strands", n - 1) });
            }
        }
        letters.push(l);
    }
    let n = strands.unwrap_or_else(|| letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1);
    BraidWord::new(n, letters)
}

/// σ_{ij} = (σᵢ⋯σ_{j−2}) σ_{j−1} (σᵢ⋯σ_{j−2})⁻¹.
pub fn sqp_expand(i: usize, j: usize, n: usize) -> Result<BraidWord, DiagramError> {
    if i < 1 || i >= j || j > n {
        return Err(DiagramError::GeneratorBounds { i, j, n });
    }
    let conj: Vec<i64> = (i..j - 1).map(|k| k as i64).collect();
    let mut letters = conj.clone();
    letters.push(j as i64 - 1);
    letters.extend(conj.iter().rev().map(|&k| -k));
    BraidWord::new(n, letters)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidStats {
    pub strands: usize,
    pub components: usize,
    pub writhe: i64,
    pub seifert_circles: usize,
    pub positive: bool,
}

pub fn braid_stats(b: &BraidWord) -> BraidStats {
    BraidStats {
        strands: b.strands,
        components: b.cycles().len(),
        writhe: b.letters.iter().map(|l| l.signum()).sum(),
        seifert_circles: b.strands,
        positive: b.letters.iter().all(|&l| l > 0),
    }
}

/// s = crossings − Seifert circles + 1 for a positive diagram.
pub fn rasmussen_positive(b: &BraidWord) -> Result<i64, DiagramError> {
    if let Some(i) = b.letters.iter().position(|&l| l < 0) {
        return Err(DiagramError::NotPositive(i));
    }
    Ok(b.letters.len() as i64 - b.strands as i64 + 1)
}

/// n − ω(β), an upper bound on the slice Euler characteristic of the closure.
pub fn slice_bennequin_bound(b: &BraidWord) -> i64 {
    b.strands as i64 - braid_stats(b).writhe
}

/// Seifert matrix of the surface made of one disk per strand and one twisted band per letter.
/// Generators are the loops through consecutive bands in the same column.
pub fn seifert_matrix_from_braid(b: &BraidWord) -> Result<SeifertMatrix, DiagramError> {
    let components = b.cycles().len();
    if components != 1 {
        return Err(DiagramError::Disconnected(components));
    }
    // (column, first band position, second band position)
    let mut gens: Vec<(usize, usize, usize)> = Vec::new();
    for col in 1..b.strands {
        let pos: Vec<usize> = (0..b.letters.len()).filter(|&p| b.letters[p].unsigned_abs() as usize == col).collect();
        gens.extend(pos.windows(2).map(|w| (col, w[0], w[1])));
    }
    let expected = b.letters.len() + 1 - b.strands;
    if gens.len() != expected {
        return Err(DiagramError::RankMismatch { got: gens.len(), expected });
    }
    let sign = |p: usize| b.letters[p].signum();
    let m = gens.len();
    let mut v = vec![vec![0i64; m]; m];
    for (a, &(i, p, q)) in gens.iter().enumerate() {
        v[a][a] = -(sign(p) + sign(q)) / 2;
        for (c, &(j, r, s)) in gens.iter().enumerate() {
            if j == i && r == q {
                // loops sharing the band at q
                if sign(q) > 0 {
                    v[a][c] = 1;
                } else {
                    v[c][a] = -1;
                }
            } else if j == i + 1 {
                // adjacent columns link only when their bands interleave
                if p < r && r < q && q < s {
                    v[a][c] = -1;
                } else if r < p && p < s && s < q {
                    v[a][c] = 1;
                }
            }
        }
    }
    let a = IntMatrix::from_rows(&v);
    let t = &a - &a.transpose();
    if !t.is_unimodular() {
        return Err(DiagramError::RankMismatch { got: m, expected });
    }
    Ok(SeifertMatrix::new(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b = parse_braid("1 1 1").unwrap();
        assert_eq!((b.strands(), b.letters()), (2, &[1, 1, 1][..]));
        assert_eq!(parse_braid("1 -2 1 -2").unwrap().strands(), 3);
        assert!(matches!(parse_braid("0"), Err(DiagramError::Parse { token: 1, .. })));
        assert!(matches!(parse_braid("1 x"), Err(DiagramError::Parse { token: 2, .. })));
        assert!(matches!(parse_braid_with_strands("1 3", Some(3)), Err(DiagramError::Parse { token: 2, .. })));
        assert_eq!(parse_braid("").unwrap().strands(), 1);
    }

    #[test]
    fn sqp_examples() {
        assert_eq!(sqp_expand(1, 2, 4).unwrap().letters(), &[1]);
        assert_eq!(sqp_expand(1, 3, 3).unwrap().letters(), &[1, 2, -1]);
        assert_eq!(sqp_expand(2, 4, 4).unwrap().letters(), &[2, 3, -2]);
        assert_eq!(sqp_expand(1, 4, 4).unwrap().letters(), &[1, 2, 3, -2, -1]);
        assert!(sqp_expand(2, 2, 3).is_err());
        assert!(sqp_expand(1, 4, 3).is_err());
    }

    #[test]
    fn stats_examples() {
        let s = braid_stats(&parse_braid("1 1 1").unwrap());
        assert_eq!((s.components, s.writhe, s.seifert_circles, s.positive), (1, 3, 2, true));
        let s = braid_stats(&parse_braid("1 1").unwrap());
        assert_eq!((s.components, s.writhe), (2, 2));
        let s = braid_stats(&BraidWord::new(1, vec![]).unwrap());
        assert_eq!((s.components, s.writhe, s.seifert_circles), (1, 0, 1));
    }

    #[test]
    fn rasmussen_and_bound_examples() {
        assert_eq!(rasmussen_positive(&parse_braid("1 1").unwrap()).unwrap(), 1);
        assert_eq!(rasmussen_positive(&parse_braid("1 1 1").unwrap()).unwrap(), 2);
        assert_eq!(rasmussen_positive(&BraidWord::new(2, vec![]).unwrap()).unwrap(), -1);
        assert!(rasmussen_positive(&parse_braid("1 -1").unwrap()).is_err());
        assert_eq!(slice_bennequin_bound(&parse_braid("1 1 1").unwrap()), -1);
        assert_eq!(slice_bennequin_bound(&BraidWord::new(1, vec![]).unwrap()), 1);
    }

    #[test]
    fn seifert_examples() {
        let a = seifert_matrix_from_braid(&parse_braid("1 1 1").unwrap()).unwrap();
        assert_eq!(a.matrix(), &IntMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]));
        let a = seifert_matrix_from_braid(&parse_braid("1 -2 1 -2").unwrap()).unwrap();
        assert_eq!(a.matrix(), &IntMatrix::from_rows(&[vec![-1, -1], vec![0, 1]]));
        assert_eq!(seifert_matrix_from_braid(&parse_braid("1").unwrap()).unwrap().size(), 0);
        assert!(matches!(seifert_matrix_from_braid(&parse_braid("1 1").unwrap()), Err(DiagramError::Disconnected(2))));
    }
}
