//! Facets of the base alcove, parabolic subgroups, and minimal / max-min
//! representatives of (double) cosets.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::linalg::{rat, Rational};
use crate::root_data::{dot, AffineRoot};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Side, Word};
use crate::{Error, Result};

/// A facet in the closure of the base alcove, given by the simple reflections
/// fixing it. The empty set is the alcove itself; `{1..m}` is the special
/// vertex at the origin.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    nodes: BTreeSet<usize>,
}

impl Facet {
    /// Checks that every node is in `0..=rank` and that not all of them are
    /// present.
    pub fn new(nodes: impl IntoIterator<Item = usize>, rank: usize) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if nodes.iter().any(|&i| i > rank) || nodes.len() == rank + 1 {
            return Err(Error::ImproperFacet(nodes.into_iter().collect()));
        }
        Ok(Facet { nodes })
    }

    pub fn alcove() -> Self {
        Facet::default()
    }

    pub fn special_vertex(rank: usize) -> Self {
        Facet {
            nodes: (1..=rank).collect(),
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.nodes.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.nodes.contains(&i)
    }

    pub fn is_subset(&self, other: &Facet) -> bool {
        self.nodes.is_subset(&other.nodes)
    }

    pub fn intersection(&self, other: &Facet) -> Facet {
        Facet {
            nodes: self.nodes.intersection(&other.nodes).copied().collect(),
        }
    }

    pub(crate) fn from_set_unchecked(nodes: BTreeSet<usize>) -> Facet {
        Facet { nodes }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nodes.is_empty() {
            return write!(f, "none");
        }
        let parts: Vec<String> = self.nodes.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl AffineWeylGroup {
    pub fn facet(&self, nodes: impl IntoIterator<Item = usize>) -> Result<Facet> {
        Facet::new(nodes, self.rank())
    }

    fn assert_fits(&self, f: &Facet) {
        assert!(
            f.nodes().all(|i| i <= self.rank()) && f.len() <= self.rank(),
            "facet {f} is not proper for rank {}",
            self.rank()
        );
    }

    /// Barycenter of the face of the closed alcove fixed by `f`.
    pub fn barycenter(&self, f: &Facet) -> Vec<Rational> {
        self.assert_fits(f);
        let free: Vec<usize> = (0..self.node_count()).filter(|i| !f.contains(*i)).collect();
        let n = self.datum().ambient_dim();
        let count = rat(free.len() as i64);
        (0..n)
            .map(|c| {
                free.iter()
                    .map(|&j| self.alcove_vertex(j)[c])
                    .sum::<Rational>()
                    / count
            })
            .collect()
    }

    /// `w = w^F * w_F` with `w^F` of minimal length in `w W_F`.
    pub fn right_decompose(
        &self,
        w: &AffineWeylElement,
        f: &Facet,
    ) -> (AffineWeylElement, AffineWeylElement) {
        let mut rep = w.clone();
        let mut tail = Vec::new();
        while let Some(i) = f.nodes().find(|&i| self.is_descent(&rep, i, Side::Right)) {
            rep = self.right_mul_simple(&rep, i);
            tail.push(i);
        }
        tail.reverse();
        let part = self.from_word(&tail).expect("facet nodes are in range");
        (rep, part)
    }

    /// `w^F`.
    pub fn min_right_rep(&self, w: &AffineWeylElement, f: &Facet) -> AffineWeylElement {
        self.right_decompose(w, f).0
    }

    /// `w = _F w * ^F w` with `^F w` of minimal length in `W_F w`.
    pub fn left_decompose(
        &self,
        w: &AffineWeylElement,
        f: &Facet,
    ) -> (AffineWeylElement, AffineWeylElement) {
        let mut rep = w.clone();
        let mut head = Vec::new();
        while let Some(i) = f.nodes().find(|&i| self.is_descent(&rep, i, Side::Left)) {
            rep = self.left_mul_simple(i, &rep);
            head.push(i);
        }
        let part = self.from_word(&head).expect("facet nodes are in range");
        (part, rep)
    }

    /// `^F w`.
    pub fn min_left_rep(&self, w: &AffineWeylElement, f: &Facet) -> AffineWeylElement {
        self.left_decompose(w, f).1
    }

    pub fn is_min_rep(&self, w: &AffineWeylElement, f: &Facet, side: Side) -> bool {
        f.nodes().all(|i| !self.is_descent(w, i, side))
    }

    /// `_{F'} w^F`: the longest element of `{(v w)^F : v in W_{F'}}`, found by
    /// climbing with the simple reflections of `F'` in ascending order.
    pub fn maxmin_rep(
        &self,
        w: &AffineWeylElement,
        left: &Facet,
        right: &Facet,
    ) -> AffineWeylElement {
        self.assert_fits(left);
        self.assert_fits(right);
        let mut x = self.min_right_rep(w, right);
        let mut len = self.length(&x);
        'climb: loop {
            for i in left.nodes() {
                let y = self.min_right_rep(&self.left_mul_simple(i, &x), right);
                let ly = self.length(&y);
                if ly > len {
                    x = y;
                    len = ly;
                    continue 'climb;
                }
            }
            return x;
        }
    }

    pub fn is_maxmin_rep(&self, w: &AffineWeylElement, left: &Facet, right: &Facet) -> bool {
        *w == self.maxmin_rep(w, left, right)
    }

    /// Counts affine roots `alpha` not vanishing on `F`, positive on the
    /// alcove, with `w(alpha) <= 0` on `F'`. Signs on a facet are read off at
    /// its barycenter.
    pub fn waldspurger_length(
        &self,
        w: &AffineWeylElement,
        left: &Facet,
        right: &Facet,
    ) -> Result<usize> {
        if !w.has_trivial_label() {
            return Err(Error::NontrivialLabel);
        }
        let b_right = self.barycenter(right);
        let b_left = self.barycenter(left);
        let lambda = &w.translation().0;
        let mut count = 0;
        for a in self.datum().roots() {
            let va = w.finite_part().apply(&a);
            let shift = dot(lambda, &va);
            let k_min = if self.datum().is_positive_root(&a) {
                0
            } else {
                1
            };
            // |va(x)| <= 1 on the closed alcove, so larger offsets stay positive.
            for k in k_min..=shift + 1 {
                let alpha = AffineRoot::new(a.clone(), k);
                if alpha.eval(&b_right) == rat(0) {
                    continue;
                }
                let image = AffineRoot::new(va.clone(), k - shift);
                if image.eval(&b_left) <= rat(0) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Minimal coset representatives for `f` (on `side`) of length at most
    /// `max_len`, grouped by length.
    fn quotient_levels(
        &self,
        f: &Facet,
        side: Side,
        max_len: usize,
    ) -> Vec<Vec<AffineWeylElement>> {
        // W^F grows by left multiplication, ^F W by right multiplication.
        let grow = match side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        let mut levels = vec![vec![self.identity()]];
        for len in 1..=max_len {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for x in &levels[len - 1] {
                for i in 0..self.node_count() {
                    let y = self.mul_simple(x, i, grow);
                    if self.length(&y) == len
                        && self.is_min_rep(&y, f, side)
                        && seen.insert(y.clone())
                    {
                        next.push(y);
                    }
                }
            }
            levels.push(next);
        }
        levels
    }

    /// All max-min representatives of length at most `max_len`, sorted by
    /// (length, reduced word).
    pub fn enumerate_reps(
        &self,
        left: &Facet,
        right: &Facet,
        max_len: usize,
    ) -> Vec<AffineWeylElement> {
        self.assert_fits(left);
        self.assert_fits(right);
        // Every double coset contains a unique element minimal on both sides,
        // no longer than its max-min representative. Search the smaller one-
        // sided quotient for those and push them up.
        let (f, side, other, other_side) = if left.len() > right.len() {
            (left, Side::Left, right, Side::Right)
        } else {
            (right, Side::Right, left, Side::Left)
        };
        let mut found = HashSet::new();
        for level in self.quotient_levels(f, side, max_len) {
            for d in level {
                if !self.is_min_rep(&d, other, other_side) {
                    continue;
                }
                let rep = self.maxmin_rep(&d, left, right);
                if self.length(&rep) <= max_len {
                    found.insert(rep);
                }
            }
        }
        self.sort_by_length_and_word(found.into_iter().collect())
    }

    pub fn sort_by_length_and_word(
        &self,
        elements: Vec<AffineWeylElement>,
    ) -> Vec<AffineWeylElement> {
        let mut keyed: Vec<(usize, Word, AffineWeylElement)> = elements
            .into_iter()
            .map(|x| (self.length(&x), self.reduced_word(&x), x))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        keyed.into_iter().map(|(_, _, x)| x).collect()
    }

    /// The finite parabolic subgroup `W_F`, by closure under the generators.
    pub fn parabolic_elements(&self, f: &Facet) -> Vec<AffineWeylElement> {
        self.assert_fits(f);
        let mut seen: HashSet<AffineWeylElement> = HashSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for i in f.nodes() {
                let y = self.right_mul_simple(&x, i);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        self.sort_by_length_and_word(seen.into_iter().collect())
    }

    /// The longest element of `(W_F)^{F_sub}`, by exhaustive enumeration.
    pub fn longest_rep(&self, f: &Facet, sub: &Facet) -> Result<AffineWeylElement> {
        if !sub.is_subset(f) {
            return Err(Error::NotSubfacet {
                sub: sub.to_vec(),
                sup: f.to_vec(),
            });
        }
        let group = self.parabolic_elements(f);
        let best = group
            .into_iter()
            .filter(|x| self.is_min_rep(x, sub, Side::Right))
            .max_by_key(|x| self.length(x))
            .expect("identity is always a representative");
        Ok(best)
    }

    pub fn longest_rep_length(&self, f: &Facet, sub: &Facet) -> Result<usize> {
        Ok(self.length(&self.longest_rep(f, sub)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{CartanType, Coweight};

    fn group(t: CartanType, m: usize) -> AffineWeylGroup {
        AffineWeylGroup::build(t, m).unwrap()
    }

    fn tr(g: &AffineWeylGroup, mu: &[i64]) -> AffineWeylElement {
        g.from_translation(&Coweight(mu.to_vec())).unwrap()
    }

    fn w(g: &AffineWeylGroup, word: &[usize]) -> AffineWeylElement {
        g.from_word(word).unwrap()
    }

    #[test]
    fn facet_validation() {
        assert!(Facet::new([0, 1, 2], 2).is_err());
        assert!(Facet::new([3], 2).is_err());
        assert_eq!(Facet::new([2, 1], 2).unwrap(), Facet::special_vertex(2));
        assert_eq!(Facet::alcove().to_string(), "none");
        assert_eq!(Facet::special_vertex(3).to_string(), "1,2,3");
    }

    #[test]
    fn min_right_rep_examples() {
        let g = group(CartanType::C, 2);
        let x = Facet::special_vertex(2);
        let r = g.min_right_rep(&tr(&g, &[1, 0]), &x);
        assert_eq!(r, w(&g, &[0]));
        assert_eq!(g.length(&r), 1);
        let anti = tr(&g, &[-1, 0]);
        assert_eq!(g.min_right_rep(&anti, &x), anti);
        assert!(g.min_right_rep(&g.identity(), &x).is_identity());
    }

    #[test]
    fn right_decomposition_is_length_additive() {
        let g = group(CartanType::C, 2);
        let f = g.facet([1, 2]).unwrap();
        for word in [&[0, 1, 2, 1][..], &[1, 0, 2, 1, 0], &[2, 1, 0, 1]] {
            let x = w(&g, word);
            let (rep, part) = g.right_decompose(&x, &f);
            assert_eq!(g.multiply(&rep, &part), x);
            assert_eq!(g.length(&x), g.length(&rep) + g.length(&part));
            assert!(g.is_min_rep(&rep, &f, Side::Right));
        }
    }

    #[test]
    fn min_left_rep_examples() {
        let g = group(CartanType::A, 2);
        let x = Facet::special_vertex(2);
        let (part, rep) = g.left_decompose(&tr(&g, &[-1, 0, 1]), &x);
        assert_eq!(rep, w(&g, &[0]));
        assert_eq!(part, w(&g, &[1, 2, 1]));
        let f1 = g.facet([1]).unwrap();
        assert!(g.min_left_rep(&w(&g, &[1]), &f1).is_identity());
        let y = w(&g, &[2, 0, 1]);
        assert_eq!(g.min_left_rep(&y, &Facet::alcove()), y);
    }

    #[test]
    fn maxmin_rep_examples() {
        let g = group(CartanType::C, 2);
        let x = Facet::special_vertex(2);
        assert_eq!(g.maxmin_rep(&tr(&g, &[1, 0]), &x, &x), tr(&g, &[-1, 0]));
        assert!(g.maxmin_rep(&g.identity(), &x, &x).is_identity());
        assert!(g.maxmin_rep(&w(&g, &[1]), &x, &x).is_identity());
    }

    #[test]
    fn maxmin_is_idempotent_and_constant_on_double_cosets() {
        let g = group(CartanType::C, 2);
        let left = g.facet([0, 2]).unwrap();
        let right = g.facet([1]).unwrap();
        for word in [&[0, 1][..], &[1, 2, 0], &[0, 1, 2, 1, 0]] {
            let x = w(&g, word);
            let rep = g.maxmin_rep(&x, &left, &right);
            assert_eq!(g.maxmin_rep(&rep, &left, &right), rep);
            for u in g.parabolic_elements(&left) {
                for v in g.parabolic_elements(&right) {
                    let y = g.multiply(&g.multiply(&u, &x), &v);
                    assert_eq!(g.maxmin_rep(&y, &left, &right), rep);
                }
            }
        }
    }

    #[test]
    fn waldspurger_examples() {
        let g = group(CartanType::C, 2);
        let x = Facet::special_vertex(2);
        assert_eq!(g.waldspurger_length(&tr(&g, &[-1, 0]), &x, &x).unwrap(), 4);
        let s0 = w(&g, &[0]);
        let c = Facet::alcove();
        assert_eq!(g.waldspurger_length(&s0, &c, &c).unwrap(), 1);
        assert_eq!(g.waldspurger_length(&g.identity(), &c, &x).unwrap(), 0);
        // W_{F'} is not inside W_F here, so the identity coset climbs to w_0.
        assert_eq!(g.waldspurger_length(&g.identity(), &x, &c).unwrap(), 4);
    }

    #[test]
    fn enumerate_special_reps_in_c2() {
        let g = group(CartanType::C, 2);
        let x = Facet::special_vertex(2);
        let reps = g.enumerate_reps(&x, &x, 6);
        assert_eq!(
            reps,
            vec![g.identity(), tr(&g, &[-1, 0]), tr(&g, &[-1, -1])]
        );
    }

    #[test]
    fn enumerate_iwahori_reps_of_length_one() {
        let g = group(CartanType::C, 3);
        let c = Facet::alcove();
        let reps = g.enumerate_reps(&c, &c, 1);
        let mut expected = vec![g.identity()];
        expected.extend((0..=3).map(|i| w(&g, &[i])));
        assert_eq!(reps, expected);
    }

    #[test]
    fn enumerate_agrees_across_search_sides() {
        // Left facet larger than right exercises the left quotient search.
        let g = group(CartanType::C, 2);
        let big = g.facet([1, 2]).unwrap();
        let small = g.facet([0]).unwrap();
        let reps = g.enumerate_reps(&big, &small, 7);
        let brute: Vec<_> = {
            let all = g.enumerate_reps(&Facet::alcove(), &Facet::alcove(), 7);
            let v = all
                .into_iter()
                .filter(|x| g.is_maxmin_rep(x, &big, &small))
                .collect();
            g.sort_by_length_and_word(v)
        };
        assert_eq!(reps, brute);
    }

    #[test]
    fn longest_rep_examples() {
        let g = group(CartanType::C, 2);
        let x = Facet::special_vertex(2);
        assert_eq!(g.parabolic_elements(&x).len(), 8);
        assert_eq!(g.longest_rep_length(&x, &Facet::alcove()).unwrap(), 4);
        let f = g.facet([0, 2]).unwrap();
        let sub = g.facet([2]).unwrap();
        assert_eq!(g.longest_rep_length(&f, &sub).unwrap(), 1);
        assert_eq!(g.longest_rep(&f, &sub).unwrap(), w(&g, &[0]));
        assert_eq!(g.longest_rep_length(&f, &f).unwrap(), 0);
        assert!(matches!(
            g.longest_rep_length(&sub, &f),
            Err(Error::NotSubfacet { .. })
        ));
    }

    #[test]
    fn right_min_closed_form_for_translations() {
        let g = group(CartanType::C, 2);
        let x = Facet::special_vertex(2);
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let mu = [a, b];
                let pairings: Vec<i64> = g
                    .datum()
                    .positive_roots()
                    .iter()
                    .map(|r| dot(&mu, r))
                    .collect();
                let total: i64 = pairings.iter().map(|p| p.abs()).sum();
                if total > 12 {
                    continue;
                }
                let positive = pairings.iter().filter(|p| **p > 0).count() as i64;
                let rep = g.min_right_rep(&tr(&g, &mu), &x);
                assert_eq!(g.length(&rep) as i64, total - positive, "{mu:?}");
            }
        }
    }
}
