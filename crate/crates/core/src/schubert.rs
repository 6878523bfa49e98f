//! Schubert-variety dimensions and the closure stratification by max-min
//! representatives, including the special-vertex case where representatives
//! are antidominant translations.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cosets::Facet;
use crate::root_data::{dot, Coweight};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Word};
use crate::{Error, Result};

/// Bruhat order restricted to the representatives below a fixed element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataPoset {
    /// Sorted by (length, reduced word); the last element is the top.
    pub elements: Vec<AffineWeylElement>,
    pub words: Vec<Word>,
    pub dims: Vec<usize>,
    /// Cover relations `(lower, upper)` as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl StrataPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> &AffineWeylElement {
        self.elements
            .last()
            .expect("a stratification is never empty")
    }

    pub fn is_chain(&self) -> bool {
        self.covers.len() + 1 == self.elements.len()
            && self
                .covers
                .iter()
                .enumerate()
                .all(|(k, &(a, b))| a == k && b == k + 1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "covers": self.covers.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "dims": self.dims,
            "elements": self.words.iter().map(|w| w.letters().to_vec()).collect::<Vec<_>>(),
        })
    }

    /// Hasse diagram; node ids are reduced words joined by `_` (`e` for the
    /// identity).
    pub fn to_dot(&self) -> String {
        let id = |w: &Word| {
            if w.is_empty() {
                "e".to_string()
            } else {
                w.letters()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join("_")
            }
        };
        let mut out = String::from("digraph strata {\n  rankdir=BT;\n");
        for (w, d) in self.words.iter().zip(&self.dims) {
            let label = if w.is_empty() {
                "e".to_string()
            } else {
                w.to_string()
            };
            writeln!(out, "  \"{}\" [label=\"{} / {}\"];", id(w), label, d).unwrap();
        }
        for &(a, b) in &self.covers {
            writeln!(
                out,
                "  \"{}\" -> \"{}\";",
                id(&self.words[a]),
                id(&self.words[b])
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl AffineWeylGroup {
    /// Dimension of the Schubert variety of the double coset of `w`.
    pub fn schubert_dim(&self, w: &AffineWeylElement, left: &Facet, right: &Facet) -> usize {
        self.length(&self.maxmin_rep(w, left, right))
    }

    pub fn strata(&self, w: &AffineWeylElement, left: &Facet, right: &Facet) -> StrataPoset {
        let top = self.maxmin_rep(w, left, right);
        let elements: Vec<AffineWeylElement> = self
            .enumerate_reps(left, right, self.length(&top))
            .into_iter()
            .filter(|v| self.bruhat_leq(v, &top))
            .collect();
        let n = elements.len();
        let dims: Vec<usize> = elements.iter().map(|x| self.length(x)).collect();
        let words: Vec<Word> = elements.iter().map(|x| self.reduced_word(x)).collect();
        let mut below = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                below[i][j] =
                    i != j && dims[i] < dims[j] && self.bruhat_leq(&elements[i], &elements[j]);
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if below[i][j] && !(0..n).any(|k| below[i][k] && below[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        StrataPoset {
            elements,
            words,
            dims,
            covers,
        }
    }

    /// The antidominant element of `W_0 mu`, by reflecting in simple roots
    /// that pair positively.
    pub fn antidominant_rep(&self, mu: &Coweight) -> Result<Coweight> {
        let datum = self.datum();
        datum.check_dim(&mu.0)?;
        let mut cur = mu.clone();
        while let Some(a) = datum.simple_roots().iter().find(|a| dot(&cur.0, a) > 0) {
            cur = datum.reflect_coweight(&cur, a);
        }
        Ok(cur)
    }

    /// `lambda <= mu` iff both are antidominant and `lambda - mu` is a
    /// non-negative integer combination of simple coroots.
    pub fn antidominance_leq(&self, lambda: &Coweight, mu: &Coweight) -> Result<bool> {
        let datum = self.datum();
        for x in [lambda, mu] {
            datum.check_dim(&x.0)?;
            if !datum.is_antidominant(x) {
                return Err(Error::NotAntidominant(x.0.clone()));
            }
        }
        let diff: Vec<i64> = lambda.0.iter().zip(&mu.0).map(|(a, b)| a - b).collect();
        Ok(datum
            .simple_coroot_coefficients(&diff)
            .is_some_and(|c| c.iter().all(|q| q.is_integer() && *q.numer() >= 0)))
    }

    /// `|<mu_anti, 2 rho>|`.
    pub fn special_dim(&self, mu: &Coweight) -> Result<usize> {
        let anti = self.antidominant_rep(mu)?;
        Ok(dot(&anti.0, self.datum().two_rho()).unsigned_abs() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    fn tr(g: &AffineWeylGroup, mu: &[i64]) -> AffineWeylElement {
        g.from_translation(&Coweight(mu.to_vec())).unwrap()
    }

    #[test]
    fn dims_from_unitary_table() {
        let c2 = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        let x2 = Facet::special_vertex(2);
        assert_eq!(c2.schubert_dim(&tr(&c2, &[-1, -1]), &x2, &x2), 6);
        assert_eq!(c2.schubert_dim(&c2.identity(), &Facet::alcove(), &x2), 0);
        assert_eq!(c2.schubert_dim(&c2.identity(), &x2, &Facet::alcove()), 4);
        let c3 = AffineWeylGroup::build(CartanType::C, 3).unwrap();
        let x3 = Facet::special_vertex(3);
        assert_eq!(c3.schubert_dim(&tr(&c3, &[-1, 0, 0]), &x3, &x3), 6);
    }

    #[test]
    fn strata_of_antidominant_translation() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        let x = Facet::special_vertex(2);
        let p = g.strata(&tr(&g, &[-1, -1]), &x, &x);
        assert_eq!(
            p.elements,
            vec![g.identity(), tr(&g, &[-1, 0]), tr(&g, &[-1, -1])]
        );
        assert_eq!(p.dims, vec![0, 4, 6]);
        assert!(p.is_chain());
        let single = g.strata(&g.identity(), &x, &x);
        assert_eq!(single.len(), 1);
        assert!(single.covers.is_empty());
    }

    #[test]
    fn strata_below_simple_reflection() {
        let g = AffineWeylGroup::build(CartanType::A, 2).unwrap();
        let c = Facet::alcove();
        let s0 = g.simple_reflection(0).unwrap();
        let p = g.strata(&s0, &c, &c);
        assert_eq!(p.elements, vec![g.identity(), s0]);
        assert_eq!(p.covers, vec![(0, 1)]);
    }

    #[test]
    fn strata_output_is_a_consistent_poset() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        let left = g.facet([1]).unwrap();
        let right = g.facet([2]).unwrap();
        let w = g.from_word(&[0, 1, 2, 1, 0, 2]).unwrap();
        let p = g.strata(&w, &left, &right);
        assert_eq!(*p.top(), g.maxmin_rep(&w, &left, &right));
        for &(a, b) in &p.covers {
            assert!(p.dims[a] < p.dims[b]);
        }
        for x in &p.elements {
            assert!(g.is_maxmin_rep(x, &left, &right));
            let sub = g.strata(x, &left, &right);
            assert!(sub.elements.iter().all(|y| p.elements.contains(y)));
        }
    }

    #[test]
    fn antidominant_examples() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        assert_eq!(
            g.antidominant_rep(&Coweight(vec![1, 0])).unwrap(),
            Coweight(vec![-1, 0])
        );
        assert!(g
            .antidominance_leq(&Coweight(vec![-1, 0]), &Coweight(vec![-1, -1]))
            .unwrap());
        assert!(!g
            .antidominance_leq(&Coweight(vec![-1, -1]), &Coweight(vec![-1, 0]))
            .unwrap());
        let mu = Coweight(vec![-2, -1]);
        assert!(g.antidominance_leq(&mu, &mu).unwrap());
        assert!(matches!(
            g.antidominance_leq(&Coweight(vec![1, 0]), &mu),
            Err(Error::NotAntidominant(_))
        ));
    }

    #[test]
    fn special_dim_examples() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        assert_eq!(g.special_dim(&Coweight(vec![-1, 0])).unwrap(), 4);
        assert_eq!(g.special_dim(&Coweight(vec![0, 0])).unwrap(), 0);
        assert_eq!(
            g.antidominant_rep(&Coweight(vec![2, -1])).unwrap(),
            Coweight(vec![-2, -1])
        );
        assert_eq!(g.special_dim(&Coweight(vec![2, -1])).unwrap(), 10);
        assert_eq!(g.length(&tr(&g, &[-2, -1])), 10);
    }

    #[test]
    fn json_and_dot_rendering() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        let x = Facet::special_vertex(2);
        let p = g.strata(&tr(&g, &[-1, 0]), &x, &x);
        let js = p.to_json();
        assert_eq!(js["covers"], json!([[0, 1]]));
        assert_eq!(js["dims"], json!([0, 4]));
        assert_eq!(js["elements"][0], json!([]));
        assert_eq!(js["elements"][1], json!(p.words[1].letters()));
        let dot = p.to_dot();
        assert!(dot.starts_with("digraph strata {"));
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("\"e\" [label=\"e / 0\"];"));
    }
}
