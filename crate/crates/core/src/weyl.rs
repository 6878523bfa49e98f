//! The affine Weyl group `Q^v x| W_0`, optionally extended by length-zero
//! labels that act on the affine Dynkin diagram.
//!
//! Elements are kept in canonical form `omega * (t_lambda * v)`: a translation
//! `lambda` in the coroot lattice, a finite Weyl group element `v` stored as an
//! integer matrix, and a diagram automorphism `omega`. The affine part acts on
//! `V` by `x -> v(x) + lambda`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::linalg::{rat, Rational};
use crate::root_data::{dot, AffineRoot, CartanDatum, CartanType, Coweight, Vector};
use crate::{Error, Result};

/// An element of `W_0` as an orthogonal integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeylMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl FiniteWeylMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        FiniteWeylMatrix { dim, entries }
    }

    /// Builds from rows. Does not check that the matrix lies in `W_0`; use
    /// [`AffineWeylGroup::element`] for a validated element.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        Ok(FiniteWeylMatrix {
            dim,
            entries: rows.concat(),
        })
    }

    /// The orthogonal reflection in the hyperplane orthogonal to `a`.
    pub fn reflection(a: &[i64]) -> Self {
        let dim = a.len();
        let norm = dot(a, a);
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let delta = i64::from(i == j);
                entries[i * dim + j] = delta - 2 * a[i] * a[j] / norm;
            }
        }
        FiniteWeylMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn apply(&self, x: &[i64]) -> Vector {
        self.entries
            .chunks(self.dim)
            .map(|row| dot(row, x))
            .collect()
    }

    pub fn apply_rational(&self, x: &[Rational]) -> Vec<Rational> {
        self.entries
            .chunks(self.dim)
            .map(|row| row.iter().zip(x).map(|(a, b)| rat(*a) * b).sum())
            .collect()
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        entries[i * n + j] += a * other.entries[k * n + j];
                    }
                }
            }
        }
        FiniteWeylMatrix { dim: n, entries }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        FiniteWeylMatrix { dim: n, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    fn is_orthogonal(&self) -> bool {
        self.compose(&self.transpose()).is_identity()
    }
}

/// A permutation of the affine nodes `0..=m`, used as a length-zero label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramAut(Vec<usize>);

impl DiagramAut {
    pub fn identity(nodes: usize) -> Self {
        DiagramAut((0..nodes).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        DiagramAut(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        DiagramAut(inv)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    translation: Coweight,
    finite: FiniteWeylMatrix,
    omega: DiagramAut,
}

impl AffineWeylElement {
    pub fn translation(&self) -> &Coweight {
        &self.translation
    }

    pub fn finite_part(&self) -> &FiniteWeylMatrix {
        &self.finite
    }

    pub fn omega(&self) -> &DiagramAut {
        &self.omega
    }

    pub fn has_trivial_label(&self) -> bool {
        self.omega.is_identity()
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity() && self.omega.is_identity()
    }

    /// True when the element is a pure translation `e^mu`.
    pub fn is_translation(&self) -> bool {
        self.finite.is_identity() && self.omega.is_identity()
    }

    fn affine_part(&self) -> AffineWeylElement {
        AffineWeylElement {
            translation: self.translation.clone(),
            finite: self.finite.clone(),
            omega: DiagramAut::identity(self.omega.0.len()),
        }
    }
}

/// A word in the simple reflections; letter `0` is the affine node.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {p:?} in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The affine Weyl group of a [`CartanDatum`], with the data of its base
/// alcove precomputed.
#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    datum: CartanDatum,
    simple: Vec<AffineWeylElement>,
    simple_affine_roots: Vec<AffineRoot>,
    // None encodes an infinite bond (affine A1).
    coxeter: Vec<Vec<Option<u32>>>,
    vertices: Vec<Vec<Rational>>,
}

impl AffineWeylGroup {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        let m = datum.rank();
        let n = datum.ambient_dim();
        let theta = datum.highest_root().to_vec();
        let id = |t: Coweight, v: FiniteWeylMatrix| AffineWeylElement {
            translation: t,
            finite: v,
            omega: DiagramAut::identity(m + 1),
        };

        let mut simple = vec![id(
            Coweight(datum.coroot(&theta)),
            FiniteWeylMatrix::reflection(&theta),
        )];
        simple.extend(
            datum
                .simple_roots()
                .iter()
                .map(|a| id(Coweight::zero(n), FiniteWeylMatrix::reflection(a))),
        );

        let mut simple_affine_roots = vec![AffineRoot::new(theta.iter().map(|x| -x).collect(), 1)];
        simple_affine_roots.extend(
            datum
                .simple_roots()
                .iter()
                .map(|a| AffineRoot::new(a.clone(), 0)),
        );

        let coxeter = (0..=m)
            .map(|i| {
                (0..=m)
                    .map(|j| {
                        if i == j {
                            return Some(1);
                        }
                        let a = &simple_affine_roots[i].root;
                        let b = &simple_affine_roots[j].root;
                        match dot(&datum.coroot(a), b) * dot(&datum.coroot(b), a) {
                            0 => Some(2),
                            1 => Some(3),
                            2 => Some(4),
                            3 => Some(6),
                            _ => None,
                        }
                    })
                    .collect()
            })
            .collect();

        // Vertex j of the closed alcove: all simple affine roots except the
        // j-th vanish. Vertex 0 is the origin; for j >= 1 it is the
        // fundamental coweight scaled by the j-th coefficient of theta.
        let simple_roots = datum.simple_roots().to_vec();
        let gram_inv = crate::linalg::invert(&crate::linalg::gram(&simple_roots))
            .ok_or_else(|| Error::Invariant("degenerate simple roots".into()))?;
        let mut vertices = vec![vec![rat(0); n]];
        for (j, &coeff) in datum.highest_root_coefficients().iter().enumerate() {
            let c = rat(coeff);
            let y: Vec<Rational> = (0..m).map(|k| gram_inv[k][j] / c).collect();
            let x: Vec<Rational> = (0..n)
                .map(|coord| {
                    simple_roots
                        .iter()
                        .zip(&y)
                        .map(|(a, yk)| rat(a[coord]) * yk)
                        .sum()
                })
                .collect();
            vertices.push(x);
        }

        Ok(AffineWeylGroup {
            datum,
            simple,
            simple_affine_roots,
            coxeter,
            vertices,
        })
    }

    pub fn build(cartan_type: CartanType, rank: usize) -> Result<Self> {
        Self::new(CartanDatum::build(cartan_type, rank)?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Number of simple reflections, `rank + 1`.
    pub fn node_count(&self) -> usize {
        self.datum.rank() + 1
    }

    pub fn simple_affine_roots(&self) -> &[AffineRoot] {
        &self.simple_affine_roots
    }

    /// Coxeter matrix entry `m(i, j)`; `None` means infinity.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> Option<u32> {
        self.coxeter[i][j]
    }

    /// Vertex `j` of the closed base alcove.
    pub fn alcove_vertex(&self, j: usize) -> &[Rational] {
        &self.vertices[j]
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement {
            translation: Coweight::zero(self.datum.ambient_dim()),
            finite: FiniteWeylMatrix::identity(self.datum.ambient_dim()),
            omega: DiagramAut::identity(self.node_count()),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i <= self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<AffineWeylElement> {
        self.check_index(i)?;
        Ok(self.simple[i].clone())
    }

    /// Validated element `t_translation * finite`.
    pub fn element(
        &self,
        translation: Coweight,
        finite: FiniteWeylMatrix,
    ) -> Result<AffineWeylElement> {
        self.datum.check_dim(&translation.0)?;
        if finite.dim() != self.datum.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.datum.ambient_dim(),
                got: finite.dim(),
            });
        }
        if !self.datum.in_coroot_lattice(&translation) {
            return Err(Error::NotInCorootLattice(translation.0));
        }
        if !finite.is_orthogonal()
            || !self
                .datum
                .roots()
                .all(|a| self.datum.is_root(&finite.apply(&a)))
        {
            return Err(Error::NotRootPermuting);
        }
        // The root system of type A lives in a hyperplane; the matrix must fix
        // its normal so that it is really an element of W_0.
        if self.datum.cartan_type() == CartanType::A {
            let ones = vec![1; self.datum.ambient_dim()];
            if finite.apply(&ones) != ones {
                return Err(Error::NotRootPermuting);
            }
        }
        Ok(AffineWeylElement {
            translation,
            finite,
            omega: DiagramAut::identity(self.node_count()),
        })
    }

    pub fn from_translation(&self, mu: &Coweight) -> Result<AffineWeylElement> {
        self.element(
            mu.clone(),
            FiniteWeylMatrix::identity(self.datum.ambient_dim()),
        )
    }

    pub fn from_word(&self, word: &[usize]) -> Result<AffineWeylElement> {
        let mut x = self.identity();
        for &i in word {
            self.check_index(i)?;
            x = self.multiply(&x, &self.simple[i]);
        }
        Ok(x)
    }

    /// The length-zero element with label `perm`, which must preserve the
    /// affine Coxeter matrix.
    pub fn diagram_automorphism(&self, perm: &[usize]) -> Result<AffineWeylElement> {
        let k = self.node_count();
        let mut seen = vec![false; k];
        let valid_perm = perm.len() == k
            && perm
                .iter()
                .all(|&j| j < k && !std::mem::replace(&mut seen[j], true));
        let preserves = valid_perm
            && (0..k).all(|i| (0..k).all(|j| self.coxeter[i][j] == self.coxeter[perm[i]][perm[j]]));
        if !preserves {
            return Err(Error::InvalidDiagramAutomorphism(perm.to_vec()));
        }
        let mut x = self.identity();
        x.omega = DiagramAut(perm.to_vec());
        Ok(x)
    }

    fn relabel(&self, x: &AffineWeylElement, by: &DiagramAut) -> AffineWeylElement {
        let word: Vec<usize> = self
            .reduced_word(x)
            .0
            .iter()
            .map(|&i| by.image(i))
            .collect();
        self.from_word(&word)
            .expect("relabelled letters stay in range")
    }

    pub fn multiply(&self, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
        if !y.omega.is_identity() {
            // x * omega_y = omega_y * (omega_y^{-1} x omega_y), and
            // omega^{-1} s_i omega = s_{omega^{-1}(i)}.
            let head = self.relabel(&x.affine_part(), &y.omega.inverse());
            let mut prod = self.multiply(&head, &y.affine_part());
            prod.omega = x.omega.compose(&y.omega);
            return prod;
        }
        let moved = x.finite.apply(&y.translation.0);
        AffineWeylElement {
            translation: Coweight(
                x.translation
                    .0
                    .iter()
                    .zip(&moved)
                    .map(|(a, b)| a + b)
                    .collect(),
            ),
            finite: x.finite.compose(&y.finite),
            omega: x.omega.clone(),
        }
    }

    pub fn inverse(&self, x: &AffineWeylElement) -> AffineWeylElement {
        let vinv = x.finite.transpose();
        let t: Vec<i64> = vinv.apply(&x.translation.0).iter().map(|c| -c).collect();
        let aff_inv = AffineWeylElement {
            translation: Coweight(t),
            finite: vinv,
            omega: DiagramAut::identity(self.node_count()),
        };
        if x.omega.is_identity() {
            return aff_inv;
        }
        // (omega a)^{-1} = omega^{-1} (omega a^{-1} omega^{-1})
        let mut res = self.relabel(&aff_inv, &x.omega);
        res.omega = x.omega.inverse();
        res
    }

    /// Length via the root-pairing formula for `e^mu * w_fin`; the label is
    /// ignored.
    pub fn length(&self, x: &AffineWeylElement) -> usize {
        let vinv = x.finite.transpose();
        let mu = &x.translation.0;
        self.datum
            .positive_roots()
            .iter()
            .map(|a| {
                let p = dot(mu, a);
                if self.datum.is_positive_root(&vinv.apply(a)) {
                    p.unsigned_abs()
                } else {
                    (p - 1).unsigned_abs()
                }
            })
            .sum::<u64>() as usize
    }

    pub fn left_mul_simple(&self, i: usize, x: &AffineWeylElement) -> AffineWeylElement {
        self.multiply(&self.simple[i], x)
    }

    pub fn right_mul_simple(&self, x: &AffineWeylElement, i: usize) -> AffineWeylElement {
        self.multiply(x, &self.simple[i])
    }

    pub fn mul_simple(&self, x: &AffineWeylElement, i: usize, side: Side) -> AffineWeylElement {
        match side {
            Side::Left => self.left_mul_simple(i, x),
            Side::Right => self.right_mul_simple(x, i),
        }
    }

    pub fn is_descent(&self, x: &AffineWeylElement, i: usize, side: Side) -> bool {
        self.length(&self.mul_simple(x, i, side)) < self.length(x)
    }

    pub fn descents(&self, x: &AffineWeylElement, side: Side) -> BTreeSet<usize> {
        (0..self.node_count())
            .filter(|&i| self.is_descent(x, i, side))
            .collect()
    }

    /// Reduced word of the affine part, built by stripping the smallest left
    /// descent at each step. For a labelled element `x = omega * from_word(w)`.
    pub fn reduced_word(&self, x: &AffineWeylElement) -> Word {
        let mut cur = x.affine_part();
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let (i, next) = (0..self.node_count())
                .map(|i| (i, self.left_mul_simple(i, &cur)))
                .find(|(_, y)| self.length(y) < len)
                .expect("an element of positive length has a left descent");
            word.push(i);
            cur = next;
            len -= 1;
        }
        debug_assert!(cur.is_identity());
        Word(word)
    }

    /// Bruhat order via the lifting property: for a left descent `s` of `w`,
    /// `u <= w` iff `min(u, su) <= sw`. Elements with different labels are
    /// incomparable.
    pub fn bruhat_leq(&self, u: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        if u.omega != w.omega {
            return false;
        }
        let mut u = u.affine_part();
        let mut w = w.affine_part();
        let mut lu = self.length(&u);
        let mut lw = self.length(&w);
        loop {
            if lu > lw {
                return false;
            }
            if lu == lw {
                return u == w;
            }
            if lu == 0 {
                return true;
            }
            let (s, sw) = (0..self.node_count())
                .map(|i| (i, self.left_mul_simple(i, &w)))
                .find(|(_, y)| self.length(y) < lw)
                .expect("w has positive length");
            let su = self.left_mul_simple(s, &u);
            let lsu = self.length(&su);
            if lsu < lu {
                u = su;
                lu = lsu;
            }
            w = sw;
            lw -= 1;
        }
    }

    /// `w(alpha)(x) = alpha(w^{-1} x)`; for `w = t_lambda v` this is
    /// `(v a, k - <lambda, v a>)`.
    pub fn act_on_affine_root(
        &self,
        w: &AffineWeylElement,
        alpha: &AffineRoot,
    ) -> Result<AffineRoot> {
        if !w.omega.is_identity() {
            return Err(Error::NontrivialLabel);
        }
        let va = w.finite.apply(&alpha.root);
        let k = alpha.offset - dot(&w.translation.0, &va);
        Ok(AffineRoot::new(va, k))
    }

    /// The affine map `x -> v(x) + lambda` on rational points.
    pub fn act_on_point(&self, w: &AffineWeylElement, x: &[Rational]) -> Vec<Rational> {
        w.finite
            .apply_rational(x)
            .into_iter()
            .zip(&w.translation.0)
            .map(|(y, t)| y + rat(*t))
            .collect()
    }
}
