mod common;

use proptest::prelude::*;
use recpoly::parse::{parse_expr, parse_poly};
use recpoly::{Error, MultiPoly};

prop_compose! {
    fn arb_poly()(terms in prop::collection::vec(
        (prop::collection::vec(0u32..6, 3), -1_000_000_000i64..=1_000_000_000), 0..=8)) -> MultiPoly {
        common::poly(&common::xyz(), &terms)
    }
}

proptest! {
    #[test]
    fn canonical_strings_parse_back(p in arb_poly()) {
        let text = p.canonical_string();
        let back = parse_poly(&text, &common::xyz()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.canonical_string(), text);
    }

    #[test]
    fn whitespace_is_insignificant(p in arb_poly()) {
        let text = p.canonical_string();
        let squeezed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_poly(&squeezed, &common::xyz()).unwrap(), p);
    }

    #[test]
    fn garbage_suffix_is_reported_at_its_column(p in arb_poly()) {
        let text = format!("{} $", p.canonical_string());
        let col = text.chars().count();
        match parse_expr(&text, &common::xyz()) {
            Err(Error::Syntax { column, .. }) => prop_assert_eq!(column, col),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}
