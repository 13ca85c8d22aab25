//! Text and JSON renderings of classification results.
//!
//! JSON keys appear in struct field order.

use std::fmt::Write as _;

use nalg_core::linalg::Subspace;
use nalg_core::sym3::{GroupAlgElem, SubgroupId};
use nalg_core::{ClassificationReport, CogebraReport};
use serde::Serialize;

#[derive(Serialize)]
struct GiFlag {
    i: u8,
    name: &'static str,
    holds: bool,
}

#[derive(Serialize)]
struct BangFlag {
    i: u8,
    holds: bool,
}

#[derive(Serialize)]
struct CoBangFlag {
    i: u8,
    normalized: bool,
    literal: bool,
}

#[derive(Serialize)]
pub struct AnnihilatorJson {
    dim: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct AlgebraJson {
    kind: &'static str,
    dim: usize,
    gi_assoc: Vec<GiFlag>,
    gi_bang: Vec<BangFlag>,
    is_associative: bool,
    is_lie_admissible: bool,
    is_3_power_associative: bool,
    has_unit: bool,
    annihilator: AnnihilatorJson,
}

#[derive(Serialize)]
struct CogebraJson {
    kind: &'static str,
    dim: usize,
    gi_coassoc: Vec<GiFlag>,
    gi_bang: Vec<CoBangFlag>,
    is_coassociative: bool,
    is_cocommutative: bool,
    is_lie_cogebra: bool,
    has_counit: bool,
}

fn gi_flags(flags: &[bool; 6]) -> Vec<GiFlag> {
    SubgroupId::ALL
        .iter()
        .zip(flags)
        .map(|(i, &holds)| GiFlag {
            i: i.get(),
            name: i.family(),
            holds,
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn annihilator_json(dim: usize, basis: &[GroupAlgElem]) -> AnnihilatorJson {
    AnnihilatorJson {
        dim,
        basis: basis.iter().map(|v| v.to_string()).collect(),
    }
}

pub fn subspace_elements(s: &Subspace) -> Vec<GroupAlgElem> {
    s.basis()
        .iter()
        .map(|b| GroupAlgElem::from_vector(b).expect("ambient dimension 6"))
        .collect()
}

pub fn annihilator_to_json(dim: usize, basis: &[GroupAlgElem]) -> String {
    to_json(&annihilator_json(dim, basis))
}

pub fn annihilator_text(dim: usize, basis: &[GroupAlgElem]) -> String {
    let mut out = format!("annihilator dim {dim}\n");
    for v in basis {
        let _ = writeln!(out, "  {v}");
    }
    out
}

pub fn algebra_json(r: &ClassificationReport) -> String {
    to_json(&AlgebraJson {
        kind: "algebra",
        dim: r.dim,
        gi_assoc: gi_flags(&r.gi_assoc),
        gi_bang: SubgroupId::BANG
            .iter()
            .zip(&r.gi_bang)
            .map(|(i, &holds)| BangFlag { i: i.get(), holds })
            .collect(),
        is_associative: r.is_associative,
        is_lie_admissible: r.is_lie_admissible,
        is_3_power_associative: r.is_3_power_associative,
        has_unit: r.has_unit,
        annihilator: annihilator_json(r.annihilator_dim, &r.annihilator_basis),
    })
}

pub fn algebra_text(r: &ClassificationReport) -> String {
    let mut out = format!("algebra, dim {}\n", r.dim);
    for (i, &holds) in SubgroupId::ALL.iter().zip(&r.gi_assoc) {
        let _ = writeln!(out, "  {i} {:<24}{}", i.family(), yes_no(holds));
    }
    for (i, &holds) in SubgroupId::BANG.iter().zip(&r.gi_bang) {
        let _ = writeln!(out, "  {i}! {:<23}{}", "algebra", yes_no(holds));
    }
    let _ = writeln!(
        out,
        "  {:<27}{}",
        "3-power associative",
        yes_no(r.is_3_power_associative)
    );
    let _ = writeln!(out, "  {:<27}{}", "unit", yes_no(r.has_unit));
    out + &annihilator_text(r.annihilator_dim, &r.annihilator_basis)
}

pub fn cogebra_json(r: &CogebraReport) -> String {
    to_json(&CogebraJson {
        kind: "cogebra",
        dim: r.dim,
        gi_coassoc: gi_flags(&r.gi_coassoc),
        gi_bang: SubgroupId::BANG
            .iter()
            .enumerate()
            .map(|(x, i)| CoBangFlag {
                i: i.get(),
                normalized: r.gi_bang_normalized[x],
                literal: r.gi_bang_literal[x],
            })
            .collect(),
        is_coassociative: r.is_coassociative,
        is_cocommutative: r.is_cocommutative,
        is_lie_cogebra: r.is_lie_cogebra,
        has_counit: r.has_counit,
    })
}

pub fn cogebra_text(r: &CogebraReport) -> String {
    let mut out = format!("cogebra, dim {}\n", r.dim);
    for (i, &holds) in SubgroupId::ALL.iter().zip(&r.gi_coassoc) {
        let _ = writeln!(
            out,
            "  {i} {:<28}{}",
            format!("co-{}", i.family()),
            yes_no(holds)
        );
    }
    for (x, i) in SubgroupId::BANG.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {i}! {:<27}{} (literal: {})",
            "cogebra",
            yes_no(r.gi_bang_normalized[x]),
            yes_no(r.gi_bang_literal[x])
        );
    }
    let _ = writeln!(
        out,
        "  {:<31}{}",
        "cocommutative",
        yes_no(r.is_cocommutative)
    );
    let _ = writeln!(out, "  {:<31}{}", "Lie cogebra", yes_no(r.is_lie_cogebra));
    let _ = writeln!(out, "  {:<31}{}", "counit", yes_no(r.has_counit));
    out
}
