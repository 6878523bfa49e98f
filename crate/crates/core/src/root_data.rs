//! Finite reduced root systems in explicit integer coordinates, their coroots,
//! and the affine roots `a + k` built on top of them.
//!
//! Coordinates follow the usual textbook embeddings: type `A_m` lives in the
//! sum-zero hyperplane of `Z^(m+1)`, types `B_m`, `C_m`, `D_m` in `Z^m`. Roots
//! and coweights share the ambient lattice and are paired by the dot product,
//! so every Weyl group element is an orthogonal signed permutation matrix.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::linalg::{self, rat, Rational};
use crate::{Error, Result};

pub type Vector = Vec<i64>;

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    assert_eq!(x.len(), y.len(), "pairing of vectors of different length");
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn unit(n: usize, i: usize, scale: i64) -> Vector {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn add(x: &[i64], y: &[i64]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn neg(x: &[i64]) -> Vector {
    x.iter().map(|a| -a).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            other => Err(Error::UnsupportedType {
                letter: other.to_string(),
                rank: 0,
            }),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An element of the translation lattice, in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(dim: usize) -> Self {
        Coweight(vec![0; dim])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl std::ops::Neg for &Coweight {
    type Output = Coweight;

    fn neg(self) -> Coweight {
        Coweight(neg(&self.0))
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The affine function `x -> <x, root> + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub root: Vector,
    pub offset: i64,
}

impl AffineRoot {
    pub fn new(root: Vector, offset: i64) -> Self {
        AffineRoot { root, offset }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.root.len());
        self.root
            .iter()
            .zip(x)
            .map(|(a, xi)| rat(*a) * xi)
            .sum::<Rational>()
            + rat(self.offset)
    }
}

/// A finite reduced root system with a fixed base.
#[derive(Debug, Clone)]
pub struct CartanDatum {
    cartan_type: CartanType,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Vector>,
    simple_coroots: Vec<Vector>,
    positive_roots: Vec<Vector>,
    root_set: HashSet<Vector>,
    highest_root: Vector,
    highest_root_coeffs: Vec<i64>,
    two_rho: Vector,
    root_gram_inv: Vec<Vec<Rational>>,
    coroot_gram_inv: Vec<Vec<Rational>>,
}

impl CartanDatum {
    pub fn build(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let unsupported = || Error::UnsupportedType {
            letter: cartan_type.letter().to_string(),
            rank,
        };
        let min_rank = match cartan_type {
            CartanType::A | CartanType::C => 1,
            CartanType::B => 2,
            CartanType::D => 3,
        };
        if rank < min_rank {
            return Err(unsupported());
        }
        let m = rank;
        let n = if cartan_type == CartanType::A {
            m + 1
        } else {
            m
        };
        let diff = |i: usize, j: usize| add(&unit(n, i, 1), &unit(n, j, -1));
        let sum = |i: usize, j: usize| add(&unit(n, i, 1), &unit(n, j, 1));

        let mut simple_roots: Vec<Vector> = (0..m.min(n - 1)).map(|i| diff(i, i + 1)).collect();
        match cartan_type {
            CartanType::A => {}
            CartanType::B => simple_roots.push(unit(n, m - 1, 1)),
            CartanType::C => simple_roots.push(unit(n, m - 1, 2)),
            CartanType::D => simple_roots.push(sum(m - 2, m - 1)),
        }
        // `0..m.min(n-1)` yields m-1 roots for B/C/D and m for A.
        debug_assert_eq!(simple_roots.len(), m);

        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(diff(i, j));
                if cartan_type != CartanType::A {
                    positive_roots.push(sum(i, j));
                }
            }
            match cartan_type {
                CartanType::B => positive_roots.push(unit(n, i, 1)),
                CartanType::C => positive_roots.push(unit(n, i, 2)),
                _ => {}
            }
        }

        let root_gram_inv = linalg::invert(&linalg::gram(&simple_roots)).ok_or_else(unsupported)?;
        let height = |a: &Vector| -> Result<Vec<i64>> {
            let c = linalg::expand(&simple_roots, &root_gram_inv, a)
                .ok_or_else(|| Error::Invariant(format!("root {a:?} outside the span")))?;
            c.iter()
                .map(|q| {
                    if q.is_integer() && *q.numer() >= 0 {
                        Ok(q.to_integer())
                    } else {
                        Err(Error::Invariant(format!(
                            "root {a:?} is not a positive combination"
                        )))
                    }
                })
                .collect()
        };
        let mut keyed = Vec::with_capacity(positive_roots.len());
        for a in positive_roots {
            let coeffs = height(&a)?;
            keyed.push((coeffs.iter().sum::<i64>(), a, coeffs));
        }
        keyed.sort();
        let (_, highest_root, highest_root_coeffs) =
            keyed.last().cloned().expect("nonempty root system");
        let positive_roots: Vec<Vector> = keyed.into_iter().map(|(_, a, _)| a).collect();

        let coroot = |a: &Vector| -> Vector {
            let norm = dot(a, a);
            a.iter().map(|x| 2 * x / norm).collect()
        };
        let simple_coroots: Vec<Vector> = simple_roots.iter().map(coroot).collect();
        let coroot_gram_inv =
            linalg::invert(&linalg::gram(&simple_coroots)).ok_or_else(unsupported)?;
        let two_rho = positive_roots
            .iter()
            .fold(vec![0; n], |acc, a| add(&acc, a));
        let root_set = positive_roots
            .iter()
            .flat_map(|a| [a.clone(), neg(a)])
            .collect();

        Ok(CartanDatum {
            cartan_type,
            rank,
            ambient_dim: n,
            simple_roots,
            simple_coroots,
            positive_roots,
            root_set,
            highest_root,
            highest_root_coeffs,
            two_rho,
            root_gram_inv,
            coroot_gram_inv,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of ambient coordinates (`rank + 1` for type A).
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vector] {
        &self.simple_coroots
    }

    /// Positive roots sorted by height.
    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn roots(&self) -> impl Iterator<Item = Vector> + '_ {
        self.positive_roots.iter().flat_map(|a| [a.clone(), neg(a)])
    }

    pub fn is_root(&self, a: &[i64]) -> bool {
        self.root_set.contains(a)
    }

    /// In these coordinates a root is positive exactly when its first nonzero
    /// coordinate is positive.
    pub fn is_positive_root(&self, a: &[i64]) -> bool {
        a.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// Coefficients of the highest root in the simple roots.
    pub fn highest_root_coefficients(&self) -> &[i64] {
        &self.highest_root_coeffs
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn coroot(&self, a: &[i64]) -> Vector {
        let norm = dot(a, a);
        a.iter().map(|x| 2 * x / norm).collect()
    }

    pub fn pairing(&self, mu: &Coweight, a: &[i64]) -> i64 {
        dot(&mu.0, a)
    }

    pub fn check_dim(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            })
        }
    }

    /// Coefficients in the simple roots, if `x` lies in their real span.
    pub fn simple_root_coefficients(&self, x: &[i64]) -> Option<Vec<Rational>> {
        linalg::expand(&self.simple_roots, &self.root_gram_inv, x)
    }

    /// Coefficients in the simple coroots, if `x` lies in their real span.
    pub fn simple_coroot_coefficients(&self, x: &[i64]) -> Option<Vec<Rational>> {
        linalg::expand(&self.simple_coroots, &self.coroot_gram_inv, x)
    }

    pub fn in_coroot_lattice(&self, mu: &Coweight) -> bool {
        mu.0.len() == self.ambient_dim
            && self
                .simple_coroot_coefficients(&mu.0)
                .is_some_and(|c| c.iter().all(|q| q.is_integer()))
    }

    /// `s_a(mu) = mu - <mu, a> a^v`.
    pub fn reflect_coweight(&self, mu: &Coweight, a: &[i64]) -> Coweight {
        let k = dot(&mu.0, a);
        let check = self.coroot(a);
        Coweight(mu.0.iter().zip(&check).map(|(x, c)| x - k * c).collect())
    }

    pub fn is_antidominant(&self, mu: &Coweight) -> bool {
        self.simple_roots.iter().all(|a| dot(&mu.0, a) <= 0)
    }

    /// Positivity of an affine root on the base alcove
    /// `{x : a(x) > 0 for simple a, theta(x) < 1}`.
    pub fn affine_root_positive(&self, alpha: &AffineRoot) -> bool {
        alpha.offset >= 1 || (alpha.offset == 0 && self.is_positive_root(&alpha.root))
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.cartan_type, self.rank)
    }
}
