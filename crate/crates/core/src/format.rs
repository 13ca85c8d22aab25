//! The JSON file format for algebras and cogebras.
//!
//! ```json
//! {"kind": "algebra", "dim": 2, "basis": ["e1", "e2"],
//!  "products": [{"left": 1, "right": 1, "out": [{"k": 1, "c": "1"}]}],
//!  "unit": ["1", "0"]}
//! ```
//!
//! Cogebras use `"coproducts": [{"in": k, "out": [{"i": i, "j": j, "c": …}]}]`
//! and `"counit"`. Indices are one-based, omitted constants are zero, and
//! `basis` and `unit`/`counit` may be omitted on input. Printing is canonical:
//! two-space indentation, rationals in lowest terms, entries sorted by index,
//! zero constants and empty cells dropped, trailing newline.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::cogebra::Cogebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Document {
    Algebra(Algebra),
    Cogebra(Cogebra),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Probe {
            kind: Kind,
        }
        match from_json::<Probe>(text)?.kind {
            Kind::Algebra => parse_algebra(text).map(Document::Algebra),
            Kind::Cogebra => parse_cogebra(text).map(Document::Cogebra),
        }
    }

    pub fn print(&self) -> String {
        match self {
            Document::Algebra(a) => print_algebra(a),
            Document::Cogebra(c) => print_cogebra(c),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Algebra,
    Cogebra,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    kind: Kind,
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    products: Vec<ProductCell>,
    #[serde(default)]
    unit: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductCell {
    left: usize,
    right: usize,
    out: Vec<ProductTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductTerm {
    k: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CogebraFile {
    kind: Kind,
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    coproducts: Vec<CoproductCell>,
    #[serde(default)]
    counit: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoproductCell {
    #[serde(rename = "in")]
    input: usize,
    out: Vec<CoproductTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoproductTerm {
    i: usize,
    j: usize,
    c: String,
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            Error::Format(e.to_string())
        } else {
            Error::Syntax {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }
        }
    })
}

/// One-based file index to zero-based.
fn index(i: usize, dim: usize) -> Result<usize> {
    if i == 0 || i > dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    Ok(i - 1)
}

fn rational(text: &str) -> Result<Rational> {
    text.parse()
}

fn vector(values: &[String]) -> Result<Vector> {
    values.iter().map(|s| rational(s)).collect()
}

fn check_kind(found: Kind, expected: Kind) -> Result<()> {
    if found != expected {
        return Err(Error::Format(
            format!("expected a {expected:?} document, found {found:?}").to_lowercase(),
        ));
    }
    Ok(())
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = from_json(text)?;
    check_kind(file.kind, Kind::Algebra)?;
    let n = file.dim;
    let mut entries = Vec::new();
    for cell in &file.products {
        let (i, j) = (index(cell.left, n)?, index(cell.right, n)?);
        for term in &cell.out {
            entries.push((i, j, index(term.k, n)?, rational(&term.c)?));
        }
    }
    let mut a = Algebra::from_constants(n, entries)?;
    if let Some(names) = file.basis {
        a = a.with_basis(names)?;
    }
    if let Some(u) = file.unit {
        a = a.with_unit(vector(&u)?)?;
    }
    Ok(a)
}

pub fn parse_cogebra(text: &str) -> Result<Cogebra> {
    let file: CogebraFile = from_json(text)?;
    check_kind(file.kind, Kind::Cogebra)?;
    let n = file.dim;
    let mut entries = Vec::new();
    for cell in &file.coproducts {
        let k = index(cell.input, n)?;
        for term in &cell.out {
            entries.push((k, index(term.i, n)?, index(term.j, n)?, rational(&term.c)?));
        }
    }
    let mut c = Cogebra::from_constants(n, entries)?;
    if let Some(names) = file.basis {
        c = c.with_basis(names)?;
    }
    if let Some(e) = file.counit {
        c = c.with_counit(vector(&e)?)?;
    }
    Ok(c)
}

fn strings(v: &Vector) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn to_text<T: Serialize>(file: &T) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn print_algebra(a: &Algebra) -> String {
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let out: Vec<ProductTerm> = a
                .product(i, j)
                .iter()
                .map(|(k, c)| ProductTerm {
                    k: k + 1,
                    c: c.to_string(),
                })
                .collect();
            if !out.is_empty() {
                products.push(ProductCell {
                    left: i + 1,
                    right: j + 1,
                    out,
                });
            }
        }
    }
    to_text(&AlgebraFile {
        kind: Kind::Algebra,
        dim: n,
        basis: Some(a.basis().to_vec()),
        products,
        unit: a.unit().map(strings),
    })
}

pub fn print_cogebra(c: &Cogebra) -> String {
    let coproducts = (0..c.dim())
        .filter(|&k| !c.coproduct(k).is_empty())
        .map(|k| CoproductCell {
            input: k + 1,
            out: c
                .coproduct(k)
                .iter()
                .map(|(i, j, d)| CoproductTerm {
                    i: i + 1,
                    j: j + 1,
                    c: d.to_string(),
                })
                .collect(),
        })
        .collect();
    to_text(&CogebraFile {
        kind: Kind::Cogebra,
        dim: c.dim(),
        basis: Some(c.basis().to_vec()),
        coproducts,
        counit: c.counit().map(strings),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::dualize_algebra;

    const K1: &str = r#"{"kind": "algebra", "dim": 1,
        "products": [{"left": 1, "right": 1, "out": [{"k": 1, "c": "1"}]}]}"#;

    #[test]
    fn minimal_file() {
        let a = parse_algebra(K1).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.constant(0, 0, 0), Rational::one());
        assert!(a.unit().is_none());
        assert_eq!(a.basis(), &["e1".to_string()]);
    }

    #[test]
    fn canonical_rationals() {
        let text = K1.replace(r#""c": "1""#, r#""c": "2/4""#);
        let a = parse_algebra(&text).unwrap();
        assert_eq!(a.constant(0, 0, 0), Rational::new(1, 2).unwrap());
        assert!(print_algebra(&a).contains(r#""c": "1/2""#));
    }

    #[test]
    fn canonical_layout() {
        let a = parse_algebra(K1)
            .unwrap()
            .with_unit(Vector::from_integers(&[1]))
            .unwrap();
        let expected = r#"{
  "kind": "algebra",
  "dim": 1,
  "basis": [
    "e1"
  ],
  "products": [
    {
      "left": 1,
      "right": 1,
      "out": [
        {
          "k": 1,
          "c": "1"
        }
      ]
    }
  ],
  "unit": [
    "1"
  ]
}
"#;
        assert_eq!(print_algebra(&a), expected);
        assert_eq!(print_algebra(&parse_algebra(expected).unwrap()), expected);
    }

    #[test]
    fn cogebra_round_trip() {
        let a = parse_algebra(K1)
            .unwrap()
            .with_unit(Vector::from_integers(&[1]))
            .unwrap();
        let c = dualize_algebra(&a);
        let text = print_cogebra(&c);
        assert!(text.contains(r#""in": 1"#));
        assert_eq!(parse_cogebra(&text).unwrap(), c);
        assert_eq!(Document::parse(&text).unwrap(), Document::Cogebra(c));
    }

    #[test]
    fn errors() {
        let zero = K1.replace(r#""k": 1"#, r#""k": 0"#);
        let e = parse_algebra(&zero).unwrap_err();
        assert_eq!(e, Error::IndexOutOfRange { index: 0, dim: 1 });
        assert!(e.to_string().starts_with("index out of range"));

        let bad = K1.replace(r#""c": "1""#, r#""c": "1/0""#);
        assert!(matches!(
            parse_algebra(&bad),
            Err(Error::MalformedRational(_))
        ));

        let dup = r#"{"kind": "algebra", "dim": 1, "products": [
            {"left": 1, "right": 1, "out": [{"k": 1, "c": "1"}]},
            {"left": 1, "right": 1, "out": [{"k": 1, "c": "2"}]}]}"#;
        assert_eq!(
            parse_algebra(dup),
            Err(Error::DuplicateEntry(vec![1, 1, 1]))
        );

        let unknown = K1.replace(r#""dim": 1"#, r#""dim": 1, "name": "k""#);
        assert!(
            matches!(parse_algebra(&unknown), Err(Error::Format(m)) if m.contains("unknown field"))
        );

        match parse_algebra("{\"kind\": \"algebra\",\n \"dim\": 1,,}") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 11)),
            other => panic!("{other:?}"),
        }

        assert!(matches!(parse_cogebra(K1), Err(Error::Format(_))));
        let bad_unit = K1.replace(r#""dim": 1"#, r#""dim": 1, "unit": ["2"]"#);
        assert!(matches!(
            parse_algebra(&bad_unit),
            Err(Error::InvalidUnit(_))
        ));
    }
}
