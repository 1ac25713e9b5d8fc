use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., d-1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm {
            images: (0..d as u8).collect(),
        }
    }

    /// From 0-based images `w(0), .., w(d-1)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in images {
            if x >= d || seen[x] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        if line.contains(&0) {
            return Err(Error::domain("one-line notation is 1-based"));
        }
        Perm::from_images(&line.iter().map(|&x| x - 1).collect::<Vec<_>>())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Inversion count, the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Whether `l(w s_i) < l(w)` (1-based `i`).
    pub fn has_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `w s_i`: swap the entries in positions `i` and `i+1` (1-based).
    pub fn mul_simple(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.degree() {
            return Err(Error::domain(format!("s_{i} is not a generator of S_{}", self.degree())));
        }
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Perm { images })
    }

    /// A reduced word `i_1 .. i_k` with `w = s_{i_1} .. s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.degree()).find(|&i| w.has_descent(i)) {
            w.images.swap(i - 1, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::domain("permutations of different degrees"));
        }
        Ok(Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        })
    }

    pub fn all(d: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = Vec::with_capacity(d);
        let mut used = vec![false; d];
        fn rec(d: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if current.len() == d {
                out.push(Perm::from_images(current).expect("bijection"));
                return;
            }
            for x in 0..d {
                if !used[x] {
                    used[x] = true;
                    current.push(x);
                    rec(d, current, used, out);
                    current.pop();
                    used[x] = false;
                }
            }
        }
        rec(d, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

/// A signed permutation of `{±1, .., ±d}` in one-line notation; the type B
/// Weyl group, with `s_0` negating the first entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(d: usize) -> Self {
        SignedPerm {
            images: (1..=d as i8).collect(),
        }
    }

    pub fn from_one_line(line: &[i64]) -> Result<Self> {
        let d = line.len();
        let mut seen = vec![false; d + 1];
        for &x in line {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > d || seen[a] {
                return Err(Error::domain(format!("{line:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm {
            images: line.iter().map(|&x| x as i8).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> i64 {
        self.images[i] as i64
    }

    /// Whether `l(w s_i) < l(w)`; `i = 0` is the sign-change generator.
    pub fn has_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.images[0] < 0
        } else {
            self.images[i - 1] > self.images[i]
        }
    }

    pub fn mul_simple(&self, i: usize) -> Result<Self> {
        if i >= self.degree() {
            return Err(Error::domain(format!("s_{i} is not a generator of B_{}", self.degree())));
        }
        let mut images = self.images.clone();
        if i == 0 {
            images[0] = -images[0];
        } else {
            images.swap(i - 1, i);
        }
        Ok(SignedPerm { images })
    }

    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..w.degree()).find(|&i| w.has_descent(i)) {
            w = w.mul_simple(i).expect("generator in range");
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    /// All `2^d d!` signed permutations.
    pub fn all(d: usize) -> Vec<SignedPerm> {
        let mut out = Vec::new();
        for p in Perm::all(d) {
            for mask in 0..(1u32 << d) {
                let images = (0..d)
                    .map(|i| {
                        let v = p.image(i) as i8 + 1;
                        if mask >> i & 1 == 1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect();
                out.push(SignedPerm { images });
            }
        }
        out
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
