use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DiagramError;

/// Grid diagram: column c (1-based) holds an X in row `x[c]` and an O in row `o[c]`.
/// Vertical segments join the markings in a column, horizontal ones those in a row;
/// horizontal segments pass over vertical ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridDiagram {
    size: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "O")]
    o: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridStats {
    pub components: usize,
    pub crossings: usize,
    pub writhe: i64,
    pub ne_corners: usize,
    pub tb: i64,
}

impl GridDiagram {
    pub fn new(x: Vec<usize>, o: Vec<usize>) -> Result<Self, DiagramError> {
        let size = x.len();
        if size == 0 || o.len() != size {
            return Err(DiagramError::Grid(format!("X has {} entries and O has {}", x.len(), o.len())));
        }
        for (name, p) in [("X", &x), ("O", &o)] {
            let mut seen = vec![false; size + 1];
            for &r in p.iter() {
                if r == 0 || r > size || std::mem::replace(&mut seen[r], true) {
                    return Err(DiagramError::Grid(format!("{name} is not a permutation of 1..{size}")));
                }
            }
        }
        if let Some(c) = (0..size).find(|&c| x[c] == o[c]) {
            return Err(DiagramError::Grid(format!("column {} has X and O in the same cell", c + 1)));
        }
        Ok(Self { size, x, o })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Reflection in a vertical line, which mirrors the knot.
    pub fn mirror(&self) -> Self {
        let rev = |v: &[usize]| v.iter().rev().copied().collect();
        Self { size: self.size, x: rev(&self.x), o: rev(&self.o) }
    }

    // row → column of its X / O, all 0-based
    fn row_columns(&self) -> (Vec<usize>, Vec<usize>) {
        let mut xc = vec![0; self.size];
        let mut oc = vec![0; self.size];
        for c in 0..self.size {
            xc[self.x[c] - 1] = c;
            oc[self.o[c] - 1] = c;
        }
        (xc, oc)
    }

    pub fn components(&self) -> usize {
        let (xc, _) = self.row_columns();
        let mut seen = vec![false; self.size];
        let mut count = 0;
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                // down the column to its O, then along that row to the X
                c = xc[self.o[c] - 1];
            }
        }
        count
    }

    /// Orientation X→O along rows and O→X along columns.
    pub fn stats(&self) -> GridStats {
        let n = self.size;
        let (xc, oc) = self.row_columns();
        let (mut crossings, mut writhe) = (0, 0i64);
        for c in 0..n {
            let (xr, or) = (self.x[c] - 1, self.o[c] - 1);
            let v = if xr > or { 1 } else { -1 };
            for r in xr.min(or) + 1..xr.max(or) {
                let (lo, hi) = (xc[r].min(oc[r]), xc[r].max(oc[r]));
                if lo < c && c < hi {
                    let h = if oc[r] > xc[r] { 1 } else { -1 };
                    crossings += 1;
                    writhe += h * v;
                }
            }
        }
        // a northeast corner has its horizontal arm to the west and its vertical arm to the south
        let mut ne_corners = 0;
        for c in 0..n {
            for (row, other) in [(self.x[c] - 1, self.o[c] - 1), (self.o[c] - 1, self.x[c] - 1)] {
                let partner = if xc[row] == c { oc[row] } else { xc[row] };
                if partner < c && other < row {
                    ne_corners += 1;
                }
            }
        }
        GridStats { components: self.components(), crossings, writhe, ne_corners, tb: writhe - ne_corners as i64 }
    }
}

/// Thurston–Bennequin number of a single-component grid: writhe minus NE corners.
pub fn tb_grid(g: &GridDiagram) -> Result<i64, DiagramError> {
    let s = g.stats();
    if s.components != 1 {
        return Err(DiagramError::Grid(format!("grid has {} components", s.components)));
    }
    Ok(s.tb)
}

impl FromStr for GridDiagram {
    type Err = DiagramError;

    /// "n; X=[...]; O=[...]"
    fn from_str(text: &str) -> Result<Self, DiagramError> {
        let bad = |m: String| DiagramError::Grid(m);
        let parts: Vec<&str> = text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
        let [n, xs, os] = parts[..] else {
            return Err(bad("expected \"n; X=[...]; O=[...]\"".into()));
        };
        let n: usize = n.parse().map_err(|_| bad(format!("size '{n}' is not a count")))?;
        let list = |s: &str, key: &str| -> Result<Vec<usize>, DiagramError> {
            let body = s
                .strip_prefix(key)
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
                .map(str::trim)
                .and_then(|r| r.strip_prefix('['))
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad(format!("expected {key}=[...], got '{s}'")))?;
            body.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad(format!("'{t}' is not a row index"))))
                .collect()
        };
        let g = GridDiagram::new(list(xs, "X")?, list(os, "O")?)?;
        if g.size != n {
            return Err(bad(format!("declared size {n} but lists have {} entries", g.size)));
        }
        Ok(g)
    }
}

impl<'de> Deserialize<'de> for GridDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            size: usize,
            #[serde(rename = "X")]
            x: Vec<usize>,
            #[serde(rename = "O")]
            o: Vec<usize>,
        }
        let r = Raw::deserialize(d)?;
        let g = GridDiagram::new(r.x, r.o).map_err(serde::de::Error::custom)?;
        if g.size != r.size {
            return Err(serde::de::Error::custom("size does not match the permutations"));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "5; X=[1,2,3,4,5]; O=[3,4,5,1,2]";

    #[test]
    fn trefoil_grid() {
        let g: GridDiagram = TREFOIL.parse().unwrap();
        let s = g.stats();
        assert_eq!((s.components, s.crossings, s.writhe, s.ne_corners), (1, 3, 3, 2));
        assert_eq!(tb_grid(&g).unwrap(), 1);
        let m = g.mirror();
        assert_eq!(m.stats().writhe, -3);
        assert_eq!(tb_grid(&m).unwrap(), -6);
    }

    #[test]
    fn square_unknot() {
        let g = GridDiagram::new(vec![2, 1], vec![1, 2]).unwrap();
        assert_eq!((g.stats().crossings, g.stats().ne_corners), (0, 1));
        assert_eq!(tb_grid(&g).unwrap(), -1);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(GridDiagram::new(vec![1, 1], vec![2, 2]).is_err());
        assert!(GridDiagram::new(vec![1, 2], vec![1, 2]).is_err());
        assert!("3; X=[1,2]; O=[2,1]".parse::<GridDiagram>().is_err());
        assert!("2; X=[1,2] O=[2,1]".parse::<GridDiagram>().is_err());
        // two disjoint squares
        let two = GridDiagram::new(vec![2, 1, 4, 3], vec![1, 2, 3, 4]).unwrap();
        assert_eq!(two.components(), 2);
        assert!(tb_grid(&two).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g: GridDiagram = TREFOIL.parse().unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"size":5,"X":[1,2,3,4,5],"O":[3,4,5,1,2]}"#);
        assert_eq!(serde_json::from_str::<GridDiagram>(&s).unwrap(), g);
    }
}
