//! Brute-force ground truth built only from words and the canonical-form group
//! law. The closed length formula appears only in the exhaustive coset
//! searches at the bottom, which compare lengths across a finite set.

use std::collections::{HashMap, HashSet};

use crate::cosets::Facet;
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Word};
use crate::{Error, Result};

pub const DEFAULT_BALL_LIMIT: usize = 500_000;

/// All elements of word length at most `radius`, found by BFS.
#[derive(Debug, Clone)]
pub struct Ball {
    radius: usize,
    members: HashMap<AffineWeylElement, usize>,
    words: HashMap<AffineWeylElement, Word>,
    levels: Vec<Vec<AffineWeylElement>>,
}

pub fn bfs_ball(group: &AffineWeylGroup, radius: usize) -> Result<Ball> {
    bfs_ball_with_limit(group, radius, DEFAULT_BALL_LIMIT)
}

pub fn bfs_ball_with_limit(group: &AffineWeylGroup, radius: usize, limit: usize) -> Result<Ball> {
    let id = group.identity();
    let mut members = HashMap::from([(id.clone(), 0)]);
    let mut words = HashMap::from([(id.clone(), Word(Vec::new()))]);
    let mut levels = vec![vec![id]];
    for k in 1..=radius {
        let mut next = Vec::new();
        for x in &levels[k - 1] {
            for i in 0..group.node_count() {
                let y = group.right_mul_simple(x, i);
                if members.contains_key(&y) {
                    continue;
                }
                let mut word = words[x].clone();
                word.0.push(i);
                members.insert(y.clone(), k);
                words.insert(y.clone(), word);
                next.push(y);
            }
        }
        if members.len() > limit {
            return Err(Error::BallTooLarge { radius, limit });
        }
        next.sort();
        levels.push(next);
    }
    Ok(Ball {
        radius,
        members,
        words,
        levels,
    })
}

impl Ball {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &AffineWeylElement) -> bool {
        self.members.contains_key(x)
    }

    /// Elements of length exactly `k`, in canonical-form order.
    pub fn level(&self, k: usize) -> &[AffineWeylElement] {
        &self.levels[k]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = &AffineWeylElement> {
        self.levels.iter().flatten()
    }

    /// The word found by BFS, which is reduced.
    pub fn word(&self, x: &AffineWeylElement) -> Result<&Word> {
        self.words.get(x).ok_or(Error::OutsideBall {
            radius: self.radius,
        })
    }

    pub fn oracle_length(&self, x: &AffineWeylElement) -> Result<usize> {
        self.members.get(x).copied().ok_or(Error::OutsideBall {
            radius: self.radius,
        })
    }

    /// Whether some subword of the stored reduced word of `w` evaluates to `u`.
    pub fn oracle_bruhat(
        &self,
        group: &AffineWeylGroup,
        u: &AffineWeylElement,
        w: &AffineWeylElement,
    ) -> Result<bool> {
        let word = self.word(w)?.clone();
        Ok(self.subword_search(group, &word, u))
    }

    /// Same test against an arbitrary reduced word for `w`.
    pub fn subword_search(
        &self,
        group: &AffineWeylGroup,
        word: &Word,
        u: &AffineWeylElement,
    ) -> bool {
        let mut memo = HashMap::new();
        self.subword_rec(group, word.letters(), 0, u.clone(), &mut memo)
    }

    // Can `target` be written as a subword of `word[pos..]`?
    fn subword_rec(
        &self,
        group: &AffineWeylGroup,
        word: &[usize],
        pos: usize,
        target: AffineWeylElement,
        memo: &mut HashMap<(usize, AffineWeylElement), bool>,
    ) -> bool {
        if target.is_identity() {
            return true;
        }
        match self.members.get(&target) {
            Some(&len) if len <= word.len() - pos => {}
            _ => return false,
        }
        if let Some(&hit) = memo.get(&(pos, target.clone())) {
            return hit;
        }
        let rest = group.left_mul_simple(word[pos], &target);
        let hit = self.subword_rec(group, word, pos + 1, rest, memo)
            || self.subword_rec(group, word, pos + 1, target.clone(), memo);
        memo.insert((pos, target), hit);
        hit
    }
}

/// `W_F` by closure under the generators of `F`, sorted canonically.
pub fn finite_closure(group: &AffineWeylGroup, f: &Facet) -> Vec<AffineWeylElement> {
    let mut seen = HashSet::from([group.identity()]);
    let mut stack = vec![group.identity()];
    while let Some(x) = stack.pop() {
        for i in f.nodes() {
            let y = group.right_mul_simple(&x, i);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let mut all: Vec<_> = seen.into_iter().collect();
    all.sort();
    all
}

/// Max over `u` in `W_{F'}` of min over `v` in `W_F` of `l(u w v)`, with the
/// element realizing it.
pub fn oracle_maxmin(
    group: &AffineWeylGroup,
    w: &AffineWeylElement,
    left: &Facet,
    right: &Facet,
) -> (AffineWeylElement, usize) {
    let us = finite_closure(group, left);
    let vs = finite_closure(group, right);
    let mut best: Option<(AffineWeylElement, usize)> = None;
    for u in &us {
        let uw = group.multiply(u, w);
        let inner = vs
            .iter()
            .map(|v| {
                let x = group.multiply(&uw, v);
                let l = group.length(&x);
                (x, l)
            })
            .min_by_key(|(_, l)| *l)
            .expect("W_F contains the identity");
        if best.as_ref().is_none_or(|(_, l)| inner.1 > *l) {
            best = Some(inner);
        }
    }
    best.expect("W_F' contains the identity")
}

/// The shortest element of `W_{F'} w W_F`, by exhaustive search.
pub fn oracle_min_rep(
    group: &AffineWeylGroup,
    w: &AffineWeylElement,
    left: &Facet,
    right: &Facet,
) -> (AffineWeylElement, usize) {
    let us = finite_closure(group, left);
    let vs = finite_closure(group, right);
    us.iter()
        .flat_map(|u| vs.iter().map(move |v| (u, v)))
        .map(|(u, v)| {
            let x = group.multiply(&group.multiply(u, w), v);
            let l = group.length(&x);
            (x, l)
        })
        .min_by_key(|(_, l)| *l)
        .expect("nonempty double coset")
}

/// Longest element of `(W_P)^Q`, by exhaustive search.
pub fn oracle_longest_rep(
    group: &AffineWeylGroup,
    p: &Facet,
    q: &Facet,
) -> (AffineWeylElement, usize) {
    let qs = finite_closure(group, q);
    finite_closure(group, p)
        .into_iter()
        .filter(|x| {
            let l = group.length(x);
            qs.iter().all(|v| group.length(&group.multiply(x, v)) >= l)
        })
        .map(|x| {
            let l = group.length(&x);
            (x, l)
        })
        .max_by_key(|(_, l)| *l)
        .expect("identity is always a representative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{CartanType, Coweight};

    fn group(t: CartanType, m: usize) -> AffineWeylGroup {
        AffineWeylGroup::build(t, m).unwrap()
    }

    #[test]
    fn infinite_dihedral_levels() {
        let g = group(CartanType::A, 1);
        assert_eq!(
            bfs_ball(&g, 5).unwrap().level_sizes(),
            vec![1, 2, 2, 2, 2, 2]
        );
    }

    #[test]
    fn first_level_holds_the_generators() {
        for (t, m) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::C, 2),
            (CartanType::D, 4),
        ] {
            let g = group(t, m);
            assert_eq!(bfs_ball(&g, 1).unwrap().level_sizes(), vec![1, m + 1]);
        }
    }

    #[test]
    fn levels_match_formula_lengths() {
        let g = group(CartanType::C, 2);
        let ball = bfs_ball(&g, 4).unwrap();
        for k in 0..=4 {
            assert!(ball.level(k).iter().all(|x| g.length(x) == k));
        }
    }

    #[test]
    fn oracle_examples() {
        let g = group(CartanType::C, 2);
        let ball = bfs_ball(&g, 5).unwrap();
        let t = g.from_translation(&Coweight(vec![-1, 0])).unwrap();
        assert_eq!(ball.oracle_length(&t).unwrap(), 4);
        assert!(ball.oracle_bruhat(&g, &g.identity(), &t).unwrap());
        let far = g.from_translation(&Coweight(vec![-3, 0])).unwrap();
        assert_eq!(
            ball.oracle_length(&far),
            Err(Error::OutsideBall { radius: 5 })
        );
        let x = g.facet([1, 2]).unwrap();
        let e = g.from_translation(&Coweight(vec![1, 0])).unwrap();
        assert_eq!(oracle_maxmin(&g, &e, &x, &x), (t, 4));
    }

    #[test]
    fn ball_limit_is_enforced() {
        let g = group(CartanType::C, 2);
        assert_eq!(
            bfs_ball_with_limit(&g, 6, 50).unwrap_err(),
            Error::BallTooLarge {
                radius: 6,
                limit: 50
            }
        );
    }

    #[test]
    fn subword_test_ignores_choice_of_reduced_word() {
        let g = group(CartanType::C, 2);
        let ball = bfs_ball(&g, 5).unwrap();
        let w = g.from_word(&[1, 2, 1, 2]).unwrap();
        let other = Word(vec![2, 1, 2, 1]);
        assert_eq!(g.from_word(other.letters()).unwrap(), w);
        for u in ball
            .elements()
            .filter(|u| ball.oracle_length(u).unwrap() <= 4)
        {
            assert_eq!(
                ball.oracle_bruhat(&g, u, &w).unwrap(),
                ball.subword_search(&g, &other, u)
            );
        }
    }

    #[test]
    fn longest_rep_oracle() {
        let g = group(CartanType::A, 2);
        let (x, l) = oracle_longest_rep(&g, &g.facet([1, 2]).unwrap(), &Facet::alcove());
        assert_eq!(l, 3);
        assert_eq!(x, g.from_word(&[1, 2, 1]).unwrap());
        assert_eq!(
            oracle_longest_rep(&g, &g.facet([1, 2]).unwrap(), &g.facet([2]).unwrap()).1,
            2
        );
    }
}
