//! Text syntax for elements and facets.
//!
//! Elements: `id` (or `e`), a word `w:0,1,0` (`w:` is the identity), or a
//! translation times a word `t:-1,0|id`, `t:-1,0|w:1,2,1`. Facets: `1,2` or
//! `none`.

use crate::cosets::Facet;
use crate::root_data::Coweight;
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Word};
use crate::{Error, Result};

fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
        })
        .collect()
}

pub fn parse_element(group: &AffineWeylGroup, text: &str) -> Result<AffineWeylElement> {
    let text = text.trim();
    if text == "id" || text == "e" {
        return Ok(group.identity());
    }
    if let Some(rest) = text.strip_prefix("w:") {
        return group.from_word(parse_word(rest)?.letters());
    }
    if let Some(rest) = text.strip_prefix("t:") {
        let (coords, tail) = rest
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing '|' in {text:?}")))?;
        let t = group.from_translation(&Coweight(parse_ints(coords)?))?;
        let finite = parse_element(group, tail)?;
        if tail.trim().starts_with("t:") {
            return Err(Error::Parse(format!("nested translation in {text:?}")));
        }
        return Ok(group.multiply(&t, &finite));
    }
    Err(Error::Parse(format!(
        "unrecognized element {text:?}; expected id, w:..., or t:...|..."
    )))
}

/// Word syntax for label-free elements.
pub fn format_element(group: &AffineWeylGroup, x: &AffineWeylElement) -> String {
    format!("w:{}", group.reduced_word(x))
}

/// Translation syntax `t:...|w:...` with the finite part as a word.
pub fn format_translation_form(group: &AffineWeylGroup, x: &AffineWeylElement) -> String {
    let t = group
        .from_translation(x.translation())
        .expect("translation part lies in the coroot lattice");
    let finite = group.multiply(&group.inverse(&t), x);
    let word = group.reduced_word(&finite);
    let coords: Vec<String> = x.translation().0.iter().map(i64::to_string).collect();
    if word.is_empty() {
        format!("t:{}|id", coords.join(","))
    } else {
        format!("t:{}|w:{}", coords.join(","), word)
    }
}

pub fn parse_facet(text: &str, rank: usize) -> Result<Facet> {
    let text = text.trim();
    if text == "none" || text == "\u{2205}" {
        return Ok(Facet::alcove());
    }
    let nodes = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad facet node {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Facet::new(nodes, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    #[test]
    fn element_forms() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        let t = g.from_translation(&Coweight(vec![-1, 0])).unwrap();
        assert_eq!(parse_element(&g, "t:-1,0|id").unwrap(), t);
        assert_eq!(parse_element(&g, "id").unwrap(), g.identity());
        assert_eq!(parse_element(&g, "w:").unwrap(), g.identity());
        assert_eq!(
            parse_element(&g, "w:0,1,0").unwrap(),
            g.from_word(&[0, 1, 0]).unwrap()
        );
        let x = parse_element(&g, "t:-1,0|w:1,2,1").unwrap();
        assert_eq!(x, g.multiply(&t, &g.from_word(&[1, 2, 1]).unwrap()));
        assert_eq!(format_translation_form(&g, &x), "t:-1,0|w:1,2,1");
        assert_eq!(format_translation_form(&g, &t), "t:-1,0|id");
    }

    #[test]
    fn element_errors() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        for bad in ["", "x:1", "w:3", "w:a", "t:1,0", "t:1|id", "t:1,0|t:1,0|id"] {
            assert!(parse_element(&g, bad).is_err(), "{bad}");
        }
        let a = AffineWeylGroup::build(CartanType::A, 2).unwrap();
        assert!(matches!(
            parse_element(&a, "t:1,0,0|id"),
            Err(Error::NotInCorootLattice(_))
        ));
    }

    #[test]
    fn word_syntax_round_trips() {
        let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
        for word in [vec![], vec![0], vec![0, 1, 2, 1], vec![2, 1, 0, 1, 2]] {
            let x = g.from_word(&word).unwrap();
            assert_eq!(parse_element(&g, &format_element(&g, &x)).unwrap(), x);
        }
    }

    #[test]
    fn facets() {
        assert_eq!(parse_facet("none", 2).unwrap(), Facet::alcove());
        assert_eq!(parse_facet("1,2", 2).unwrap().to_vec(), vec![1, 2]);
        assert!(parse_facet("0,1,2", 2).is_err());
        assert!(parse_facet("3", 2).is_err());
        assert!(parse_facet("x", 2).is_err());
    }
}
