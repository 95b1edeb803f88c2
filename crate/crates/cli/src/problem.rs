//! Problem-file ingestion: a TOML document declaring variables, weights, the
//! object kind and its generators or relations.
//!
//! ```toml
//! variables = ["x", "y"]
//! weights = [1, 1]
//! object = "ideal"                    # or "submodule" / "quotient"
//! generators = ["x^2", "x*y", "y^2"]  # expressions; vectors for submodules
//! # rank = 2                          # submodule/quotient only, default 1
//! # shifts = [0, 1]                   # default all zero
//! # relations = ["x"]                 # quotient only
//! ```
//!
//! Every expression must parse and be homogeneous with respect to the
//! declared weights; the offending expression and term degrees are reported
//! otherwise.

use std::fmt;

use serde::Deserialize;

use betti::module::{FreeModuleSpec, ModuleVector, PresentedModule};
use betti::poly::{Grading, Homogeneity, Polynomial};

use crate::expr::{parse_vector, print_polynomial, ParseError, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemError(pub String);

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ProblemError {}

impl From<ParseError> for ProblemError {
    fn from(e: ParseError) -> Self {
        ProblemError(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Ideal,
    Submodule,
    Quotient,
}

impl ObjectKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Ideal => "ideal",
            ObjectKind::Submodule => "submodule",
            ObjectKind::Quotient => "quotient",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    variables: Vec<String>,
    weights: Vec<u32>,
    object: String,
    rank: Option<usize>,
    shifts: Option<Vec<u32>>,
    generators: Option<Vec<String>>,
    relations: Option<Vec<String>>,
}

/// A validated problem: the presented module plus everything needed to print
/// results in the input's vocabulary.
pub struct Problem {
    pub module: PresentedModule,
    pub vars: VarSet,
    pub object: ObjectKind,
    /// The raw document, hashed into reports.
    pub source: String,
}

fn err(msg: impl Into<String>) -> ProblemError {
    ProblemError(msg.into())
}

fn is_reserved_marker(name: &str) -> bool {
    name.strip_prefix('e')
        .is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
}

fn check_homogeneous(
    role: &str,
    index: usize,
    source: &str,
    components: &[Polynomial],
    spec: &FreeModuleSpec,
    vars: &VarSet,
) -> Result<ModuleVector, ProblemError> {
    let v = ModuleVector::new(spec.clone(), components.to_vec());
    if let Homogeneity::Mixed = v.degree() {
        // locate two offending degrees for the message
        let grading = spec.grading();
        let mut seen: Option<(u32, String)> = None;
        for (j, p) in v.components().iter().enumerate() {
            for (alpha, c) in p.terms() {
                let d = grading.degree_of(alpha) + spec.shift(j);
                let term = print_polynomial(
                    &Polynomial::monomial(alpha.clone(), c.clone()),
                    vars,
                );
                match &seen {
                    None => seen = Some((d, term)),
                    Some((d0, t0)) if *d0 != d => {
                        return Err(err(format!(
                            "{role} {index} ({source:?}) is not homogeneous: term {t0} has \
                             degree {d0} but term {term} has degree {d}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        return Err(err(format!("{role} {index} ({source:?}) is not homogeneous")));
    }
    Ok(v)
}

/// Parse and validate a problem document.
pub fn load_problem(text: &str) -> Result<Problem, ProblemError> {
    let raw: RawProblem =
        toml::from_str(text).map_err(|e| err(format!("invalid problem file: {e}")))?;

    // variables
    if raw.variables.is_empty() {
        return Err(err("at least one variable is required"));
    }
    for (i, name) in raw.variables.iter().enumerate() {
        let valid = !name.is_empty()
            && name
                .bytes()
                .next()
                .is_some_and(|b| b.is_ascii_alphabetic() || b == b'_')
            && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_');
        if !valid {
            return Err(err(format!("variable {i} has an invalid name {name:?}")));
        }
        if is_reserved_marker(name) {
            return Err(err(format!(
                "variable name {name:?} is reserved for component markers"
            )));
        }
        if raw.variables[..i].contains(name) {
            return Err(err(format!("duplicate variable name {name:?}")));
        }
    }
    let vars = VarSet::new(raw.variables.clone());

    // weights
    if raw.weights.len() != raw.variables.len() {
        return Err(err(format!(
            "expected {} weights, found {}",
            raw.variables.len(),
            raw.weights.len()
        )));
    }
    let grading = Grading::new(raw.weights.clone())
        .map_err(|e| err(format!("invalid weights: {e}")))?;

    let object = match raw.object.as_str() {
        "ideal" => ObjectKind::Ideal,
        "submodule" => ObjectKind::Submodule,
        "quotient" => ObjectKind::Quotient,
        other => {
            return Err(err(format!(
                "unknown object {other:?}; expected \"ideal\", \"submodule\" or \"quotient\""
            )))
        }
    };

    let rank = match (object, raw.rank) {
        (ObjectKind::Ideal, Some(r)) if r != 1 => {
            return Err(err("an ideal has rank 1; omit the rank field"))
        }
        (_, Some(0)) => return Err(err("rank must be positive")),
        (_, r) => r.unwrap_or(1),
    };
    let shifts = match raw.shifts {
        None => vec![0; rank],
        Some(s) => {
            if s.len() != rank {
                return Err(err(format!("expected {rank} shifts, found {}", s.len())));
            }
            if object == ObjectKind::Ideal && s.iter().any(|&x| x != 0) {
                return Err(err("an ideal has zero shifts; omit the shifts field"));
            }
            s
        }
    };
    let spec = FreeModuleSpec::new(grading, shifts);

    let parse_all = |role: &str, sources: &[String]| -> Result<Vec<ModuleVector>, ProblemError> {
        let mut out = Vec::with_capacity(sources.len());
        for (i, src) in sources.iter().enumerate() {
            let components = parse_vector(src, &vars, rank)
                .map_err(|e| err(format!("{role} {i} ({src:?}): {e}")))?;
            out.push(check_homogeneous(role, i, src, &components, &spec, &vars)?);
        }
        Ok(out)
    };

    let module = match object {
        ObjectKind::Ideal | ObjectKind::Submodule => {
            if raw.relations.is_some() {
                return Err(err(format!(
                    "object \"{}\" does not take relations; use \"quotient\"",
                    object.name()
                )));
            }
            let Some(gens) = &raw.generators else {
                return Err(err("generators are required for ideals and submodules"));
            };
            let gens = parse_all("generator", gens)?;
            PresentedModule::submodule(spec, gens)
                .map_err(|e| err(format!("invalid module: {e}")))?
        }
        ObjectKind::Quotient => {
            if raw.generators.is_some() {
                return Err(err(
                    "a quotient's generators are the basis vectors; give relations instead",
                ));
            }
            let Some(rels) = &raw.relations else {
                return Err(err("relations are required for quotients"));
            };
            let rels = parse_all("relation", rels)?;
            PresentedModule::quotient(spec, rels)
                .map_err(|e| err(format!("invalid module: {e}")))?
        }
    };

    Ok(Problem {
        module,
        vars,
        object,
        source: text.to_string(),
    })
}
