//! TOML recurrence documents.
//!
//! ```toml
//! variables = ["x"]
//! order = 2
//! coefficients = ["x", "1"]
//! initial = ["0", "1"]
//! ```
//!
//! With a `family` tag other than `"custom"` the preset supplies variables,
//! coefficients, and initial terms, and those fields must be absent.
//! `generalized-lucas` additionally reads `order` as `k`.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::closed_form::generalized_lucas_spec;
use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::recurrence::RecurrenceSpec;
use crate::ring::{MultiPoly, VarList};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    Fibonacci2,
    Lucas2,
    DicksonD,
    DicksonE,
    GeneralizedLucas,
    Custom,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Fibonacci2 => "fibonacci2",
            FamilyTag::Lucas2 => "lucas2",
            FamilyTag::DicksonD => "dickson-d",
            FamilyTag::DicksonE => "dickson-e",
            FamilyTag::GeneralizedLucas => "generalized-lucas",
            FamilyTag::Custom => "custom",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            FamilyTag::Fibonacci2,
            FamilyTag::Lucas2,
            FamilyTag::DicksonD,
            FamilyTag::DicksonE,
            FamilyTag::GeneralizedLucas,
            FamilyTag::Custom,
        ]
        .into_iter()
        .find(|t| t.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<String>>,
}

fn doc_err(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Document { field: field.into(), message: message.into() }
}

/// Order-2 preset `(variables, c₁, c₂, P₀, P₁)`.
fn order2_preset(tag: FamilyTag) -> Option<([&'static str; 2], [&'static str; 4])> {
    match tag {
        FamilyTag::Fibonacci2 => Some((["x", "y"], ["x", "y", "0", "1"])),
        FamilyTag::Lucas2 => Some((["x", "y"], ["x", "y", "2", "x"])),
        FamilyTag::DicksonD => Some((["x", "a"], ["x", "-a", "2", "x"])),
        FamilyTag::DicksonE => Some((["x", "a"], ["x", "-a", "1", "x"])),
        _ => None,
    }
}

/// Spec of a named preset; `order` is only read by `generalized-lucas`.
pub fn preset_spec(tag: FamilyTag, order: Option<i64>) -> Result<RecurrenceSpec> {
    if let Some((vars, exprs)) = order2_preset(tag) {
        if let Some(k) = order {
            if k != 2 {
                return Err(doc_err("order", format!("family `{}` has order 2, got {k}", tag.name())));
            }
        }
        let vars = VarList::new(vars);
        let polys: Vec<MultiPoly> = exprs.iter().map(|e| parse_poly(e, &vars)).collect::<Result<_>>()?;
        return RecurrenceSpec::new(vars, polys[..2].to_vec(), polys[2..].to_vec());
    }
    match tag {
        FamilyTag::GeneralizedLucas => {
            let k = order.ok_or_else(|| doc_err("order", "generalized-lucas needs `order` (k >= 2)"))?;
            if k < 2 {
                return Err(doc_err("order", format!("generalized-lucas needs k >= 2, got {k}")));
            }
            generalized_lucas_spec(k as usize)
        }
        _ => Err(doc_err("family", "`custom` has no preset")),
    }
}

fn check_variables(names: &[String]) -> Result<VarList> {
    let mut seen = HashSet::new();
    for (i, name) in names.iter().enumerate() {
        let mut chars = name.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(doc_err(format!("variables[{i}]"), format!("`{name}` is not an identifier")));
        }
        if !seen.insert(name) {
            return Err(doc_err(format!("variables[{i}]"), format!("duplicate variable `{name}`")));
        }
    }
    Ok(VarList::new(names.iter().cloned()))
}

fn parse_list(field: &str, items: &[String], vars: &VarList) -> Result<Vec<MultiPoly>> {
    items
        .iter()
        .enumerate()
        .map(|(i, text)| parse_poly(text, vars).map_err(|e| doc_err(format!("{field}[{i}]"), e.to_string())))
        .collect()
}

impl SpecDocument {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| doc_err("<document>", e.message().to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain document serializes")
    }

    /// Document of a custom spec with canonical expression strings.
    pub fn from_spec(spec: &RecurrenceSpec) -> Self {
        SpecDocument {
            family: Some(FamilyTag::Custom),
            variables: Some(spec.vars().names().to_vec()),
            order: Some(spec.order() as i64),
            coefficients: Some(spec.coeffs().iter().map(|c| c.canonical_string()).collect()),
            initial: Some(spec.initial().iter().map(|c| c.canonical_string()).collect()),
        }
    }

    pub fn to_spec(&self) -> Result<RecurrenceSpec> {
        let tag = self.family.unwrap_or(FamilyTag::Custom);
        if tag != FamilyTag::Custom {
            for (field, present) in [
                ("variables", self.variables.is_some()),
                ("coefficients", self.coefficients.is_some()),
                ("initial", self.initial.is_some()),
            ] {
                if present {
                    return Err(doc_err(field, format!("family `{}` fixes `{field}`; remove it", tag.name())));
                }
            }
            return preset_spec(tag, self.order);
        }
        let names = self.variables.as_ref().ok_or_else(|| doc_err("variables", "missing field"))?;
        let order = self.order.ok_or_else(|| doc_err("order", "missing field"))?;
        if order < 1 {
            return Err(doc_err("order", format!("order must be at least 1, got {order}")));
        }
        let coeffs = self.coefficients.as_ref().ok_or_else(|| doc_err("coefficients", "missing field"))?;
        let initial = self.initial.as_ref().ok_or_else(|| doc_err("initial", "missing field"))?;
        for (field, list) in [("coefficients", coeffs), ("initial", initial)] {
            if list.len() as i64 != order {
                return Err(doc_err(field, format!("expected {order} entries (the order), found {}", list.len())));
            }
        }
        let vars = check_variables(names)?;
        let c = parse_list("coefficients", coeffs, &vars)?;
        let p = parse_list("initial", initial, &vars)?;
        RecurrenceSpec::new(vars, c, p)
    }
}

pub fn load_spec_str(text: &str) -> Result<RecurrenceSpec> {
    SpecDocument::from_toml(text)?.to_spec()
}

pub fn load_spec(path: &Path) -> Result<RecurrenceSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    load_spec_str(&text)
}
