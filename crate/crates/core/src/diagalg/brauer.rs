use std::fmt;

use crate::error::{Error, Result};

use super::perm::Perm;

/// A perfect matching on `2d` points. Points `0..d` are the bottom row read
/// left to right, points `d..2d` the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    partner: Vec<u8>,
}

impl BrauerDiagram {
    pub fn from_partner(partner: &[usize]) -> Result<Self> {
        let n = partner.len();
        if n == 0 || n % 2 == 1 || n > 2 * u8::MAX as usize {
            return Err(Error::domain(format!("{n} points cannot form a Brauer diagram")));
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= n || j == i || partner[j] != i {
                return Err(Error::domain(format!("point {i} is not matched consistently")));
            }
        }
        Ok(BrauerDiagram {
            partner: partner.iter().map(|&j| j as u8).collect(),
        })
    }

    /// Build from arcs given as point pairs.
    pub fn from_pairs(d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * d];
        for &(a, b) in pairs {
            if a >= 2 * d || b >= 2 * d || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::domain(format!("arc ({a},{b}) is invalid")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        BrauerDiagram::from_partner(&partner)
    }

    pub fn identity(d: usize) -> Self {
        BrauerDiagram::from_perm(&Perm::identity(d))
    }

    /// Bottom point `i` joined to top point `w(i)`.
    pub fn from_perm(w: &Perm) -> Self {
        let d = w.degree();
        let mut partner = vec![0u8; 2 * d];
        for i in 0..d {
            let t = d + w.image(i);
            partner[i] = t as u8;
            partner[t] = i as u8;
        }
        BrauerDiagram { partner }
    }

    /// `sigma_i`, crossing strands `i` and `i+1` (1-based).
    pub fn crossing(d: usize, i: usize) -> Result<Self> {
        Ok(BrauerDiagram::from_perm(&Perm::identity(d).mul_simple(i)?))
    }

    /// `u_i`: a cup on bottom points `i, i+1` and a cap on the top ones (1-based).
    pub fn cup_cap(d: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= d {
            return Err(Error::domain(format!("u_{i} needs 1 <= i < {d}")));
        }
        let mut pairs: Vec<(usize, usize)> = (0..d)
            .filter(|&j| j != i - 1 && j != i)
            .map(|j| (j, d + j))
            .collect();
        pairs.push((i - 1, i));
        pairs.push((d + i - 1, d + i));
        BrauerDiagram::from_pairs(d, &pairs)
    }

    pub fn degree(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point] as usize
    }

    pub fn is_top(&self, point: usize) -> bool {
        point >= self.degree()
    }

    pub fn as_perm(&self) -> Option<Perm> {
        let d = self.degree();
        let images: Option<Vec<usize>> = (0..d)
            .map(|i| {
                let j = self.partner(i);
                (j >= d).then(|| j - d)
            })
            .collect();
        Perm::from_images(&images?).ok()
    }

    /// Number of bottom-to-bottom arcs.
    pub fn cups(&self) -> usize {
        let d = self.degree();
        (0..d).filter(|&i| self.partner(i) < d && self.partner(i) > i).count()
    }

    /// Minimal number of crossings: pairs of arcs interleaving on the
    /// boundary circle `b_1 .. b_d, t_d .. t_1`.
    pub fn crossings(&self) -> usize {
        let d = self.degree();
        let pos = |p: usize| if p < d { p } else { 3 * d - 1 - p };
        let chords: Vec<(usize, usize)> = (0..2 * d)
            .filter(|&p| p < self.partner(p))
            .map(|p| {
                let (a, b) = (pos(p), pos(self.partner(p)));
                (a.min(b), a.max(b))
            })
            .collect();
        let mut count = 0;
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, e) in &chords[i + 1..] {
                if (a < c && c < b && b < e) || (c < a && a < e && e < b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Exponent of the sign of this diagram in the walled kernel element.
    pub fn sign_length(&self) -> usize {
        self.crossings() + self.cups()
    }

    /// `self` stacked under `other`, with the number of closed loops removed.
    pub fn compose(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        let d = self.degree();
        if other.degree() != d {
            return Err(Error::domain(format!(
                "cannot compose diagrams of degrees {d} and {}",
                other.degree()
            )));
        }
        let mut partner = vec![usize::MAX; 2 * d];
        let mut middle_seen = vec![false; d];
        // Walk from an outer point until the path leaves again.
        let mut walk = |start: usize| {
            let (mut in_lower, mut point) = if start < d { (true, start) } else { (false, start) };
            loop {
                let next = if in_lower {
                    self.partner(point)
                } else {
                    other.partner(point)
                };
                match (in_lower, next < d) {
                    (true, true) => break next,
                    (false, false) => break next,
                    (true, false) => {
                        middle_seen[next - d] = true;
                        in_lower = false;
                        point = next - d;
                    }
                    (false, true) => {
                        middle_seen[next] = true;
                        in_lower = true;
                        point = next + d;
                    }
                }
            }
        };
        for start in 0..2 * d {
            if partner[start] != usize::MAX {
                continue;
            }
            let end = walk(start);
            partner[start] = end;
            partner[end] = start;
        }
        let mut loops = 0;
        for k in 0..d {
            if middle_seen[k] {
                continue;
            }
            loops += 1;
            let mut cur = k;
            loop {
                middle_seen[cur] = true;
                let via_lower = self.partner(d + cur) - d;
                middle_seen[via_lower] = true;
                cur = other.partner(via_lower);
                if middle_seen[cur] {
                    break;
                }
            }
        }
        Ok((BrauerDiagram::from_partner(&partner)?, loops))
    }

    /// All `(2d-1)!!` diagrams of degree `d`.
    pub fn enumerate(d: usize) -> Vec<BrauerDiagram> {
        fn rec(partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
            let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
                out.push(BrauerDiagram::from_partner(partner).expect("complete matching"));
                return;
            };
            for j in first + 1..partner.len() {
                if partner[j] == usize::MAX {
                    partner[first] = j;
                    partner[j] = first;
                    rec(partner, out);
                    partner[first] = usize::MAX;
                    partner[j] = usize::MAX;
                }
            }
        }
        let mut out = Vec::new();
        if d > 0 {
            rec(&mut vec![usize::MAX; 2 * d], &mut out);
        }
        out
    }

    pub fn count(d: usize) -> u128 {
        (1..=d as u128).map(|k| 2 * k - 1).product()
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let label = |p: usize| {
            if p < d {
                format!("{}", p + 1)
            } else {
                format!("{}'", p - d + 1)
            }
        };
        write!(f, "{{")?;
        let mut first = true;
        for p in 0..2 * d {
            let q = self.partner(p);
            if p < q {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}-{}", label(p), label(q))?;
            }
        }
        write!(f, "}}")
    }
}

/// A Brauer diagram on `r + s` strands whose through strands stay on one side
/// of the wall between strands `r` and `r+1`, and whose cups and caps cross it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalledDiagram {
    r: usize,
    s: usize,
    inner: BrauerDiagram,
}

impl WalledDiagram {
    pub fn new(r: usize, s: usize, inner: BrauerDiagram) -> Result<Self> {
        if r + s != inner.degree() {
            return Err(Error::domain(format!(
                "degree {} does not match r + s = {}",
                inner.degree(),
                r + s
            )));
        }
        if !is_wall_legal(r, &inner) {
            return Err(Error::domain(format!("{inner} violates the wall after strand {r}")));
        }
        Ok(WalledDiagram { r, s, inner })
    }

    pub fn identity(r: usize, s: usize) -> Result<Self> {
        if r + s == 0 {
            return Err(Error::domain("walled diagrams need r + s >= 1"));
        }
        WalledDiagram::new(r, s, BrauerDiagram::identity(r + s))
    }

    /// `sigma_i` for `i != r` (1-based).
    pub fn crossing(r: usize, s: usize, i: usize) -> Result<Self> {
        WalledDiagram::new(r, s, BrauerDiagram::crossing(r + s, i)?)
    }

    /// `u_r`, the cup-cap across the wall.
    pub fn cup_cap(r: usize, s: usize) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::domain("u_r needs r, s >= 1"));
        }
        WalledDiagram::new(r, s, BrauerDiagram::cup_cap(r + s, r)?)
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.r, self.s)
    }

    pub fn diagram(&self) -> &BrauerDiagram {
        &self.inner
    }

    pub fn sign_length(&self) -> usize {
        self.inner.sign_length()
    }

    pub fn compose(&self, other: &WalledDiagram) -> Result<(WalledDiagram, usize)> {
        if self.sizes() != other.sizes() {
            return Err(Error::domain("cannot compose walled diagrams of different shapes"));
        }
        let (inner, loops) = self.inner.compose(&other.inner)?;
        assert!(is_wall_legal(self.r, &inner), "composite left the walled algebra");
        Ok((
            WalledDiagram {
                r: self.r,
                s: self.s,
                inner,
            },
            loops,
        ))
    }

    /// All `(r+s)!` walled diagrams.
    pub fn enumerate(r: usize, s: usize) -> Vec<WalledDiagram> {
        BrauerDiagram::enumerate(r + s)
            .into_iter()
            .filter(|x| is_wall_legal(r, x))
            .map(|inner| WalledDiagram { r, s, inner })
            .collect()
    }

    pub fn count(r: usize, s: usize) -> u128 {
        (1..=(r + s) as u128).product()
    }
}

fn is_wall_legal(r: usize, x: &BrauerDiagram) -> bool {
    let d = x.degree();
    let left = |p: usize| (p % d) < r;
    (0..2 * d).all(|p| {
        let q = x.partner(p);
        let same_row = (p < d) == (q < d);
        (left(p) == left(q)) != same_row
    })
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
