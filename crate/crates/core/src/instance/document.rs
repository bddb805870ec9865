//! JSON documents for instances, families and atom distributions.
//!
//! Sets are sorted 1-based element lists and probabilities are `"p/q"` strings,
//! so documents carry exact values:
//!
//! ```json
//! { "n": 2, "constraints": [ { "set": [1], "p": "1/2" }, { "set": [1, 2], "p": "1/4" } ] }
//! { "n": 2, "atoms": [ { "set": [], "x": "1/4" }, { "set": [1], "x": "3/4" } ] }
//! { "n": 2, "sets": [ [1], [1, 2] ] }
//! ```

use serde::{Deserialize, Serialize};

use super::{AtomDistribution, BooleInstance, SetFamily, SubsetMask, MAX_GROUND_SET};
use crate::numerics::parse_rat;
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    n: usize,
    constraints: Vec<ConstraintDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstraintDoc {
    set: Vec<usize>,
    p: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AtomsDoc {
    n: usize,
    atoms: Vec<AtomDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AtomDoc {
    set: Vec<usize>,
    x: String,
}

#[derive(Debug, Deserialize)]
struct FamilyOrInstanceDoc {
    n: usize,
    #[serde(default)]
    sets: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    constraints: Option<Vec<ConstraintDoc>>,
}

#[derive(Debug, Serialize)]
struct FamilyDoc {
    n: usize,
    sets: Vec<Vec<usize>>,
}

fn malformed(e: serde_json::Error) -> Error {
    Error::MalformedDocument(e.to_string())
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            cap: MAX_GROUND_SET,
        });
    }
    Ok(())
}

/// Reads an instance document and validates it.
pub fn parse_instance(text: &str) -> Result<BooleInstance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(malformed)?;
    check_n(doc.n)?;
    let mut members = Vec::with_capacity(doc.constraints.len());
    let mut probs = Vec::with_capacity(doc.constraints.len());
    for c in &doc.constraints {
        members.push(SubsetMask::from_elements(doc.n, &c.set)?);
        probs.push(parse_rat(&c.p)?);
    }
    BooleInstance::new(SetFamily::new(doc.n, members)?, probs)
}

/// Canonical instance document: family order, sorted sets, lowest-terms values.
pub fn instance_to_json(inst: &BooleInstance) -> String {
    let doc = InstanceDoc {
        n: inst.n(),
        constraints: inst
            .iter()
            .map(|(s, p)| ConstraintDoc {
                set: s.elements(),
                p: p.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("instance document serializes")
}

/// Reads a family document (`"sets"`), or the family of an instance document.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    let doc: FamilyOrInstanceDoc = serde_json::from_str(text).map_err(malformed)?;
    check_n(doc.n)?;
    let lists: Vec<Vec<usize>> = match (doc.sets, doc.constraints) {
        (Some(sets), None) => sets,
        (None, Some(constraints)) => constraints.into_iter().map(|c| c.set).collect(),
        _ => {
            return Err(Error::MalformedDocument(
                "expected exactly one of \"sets\" or \"constraints\"".to_string(),
            ))
        }
    };
    let members = lists
        .iter()
        .map(|l| SubsetMask::from_elements(doc.n, l))
        .collect::<Result<Vec<_>>>()?;
    SetFamily::new(doc.n, members)
}

pub fn family_to_json(family: &SetFamily) -> String {
    let doc = FamilyDoc {
        n: family.n(),
        sets: family.members().iter().map(|s| s.elements()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("family document serializes")
}

pub fn parse_atoms(text: &str) -> Result<AtomDistribution> {
    let doc: AtomsDoc = serde_json::from_str(text).map_err(malformed)?;
    check_n(doc.n)?;
    let weights = doc
        .atoms
        .iter()
        .map(|a| Ok((SubsetMask::from_elements(doc.n, &a.set)?, parse_rat(&a.x)?)))
        .collect::<Result<Vec<_>>>()?;
    AtomDistribution::new(doc.n, weights)
}

/// Lists only the atoms with nonzero weight, in mask order.
pub fn atoms_to_json(x: &AtomDistribution) -> String {
    let doc = AtomsDoc {
        n: x.n(),
        atoms: x
            .support()
            .map(|(t, w)| AtomDoc {
                set: t.elements(),
                x: w.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("atom document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    const TWO_EVENTS: &str = r#"{"n": 2, "constraints": [
        {"set": [1], "p": "1/2"}, {"set": [2], "p": "1/2"}, {"set": [1, 2], "p": "1/4"}]}"#;

    #[test]
    fn parses_two_event_instance() {
        let inst = parse_instance(TWO_EVENTS).unwrap();
        assert_eq!(inst.n(), 2);
        assert_eq!(inst.probs(), &[rat(1, 2), rat(1, 2), rat(1, 4)]);
        assert_eq!(inst.family(), &SetFamily::all_nonempty(2).unwrap());
    }

    #[test]
    fn parses_singleton_instance() {
        let inst = parse_instance(r#"{"n": 1, "constraints": [{"set": [1], "p": "1"}]}"#).unwrap();
        assert_eq!(inst.probs(), &[rat(1, 1)]);
    }

    #[test]
    fn rejects_out_of_range_and_malformed() {
        let err = parse_instance(r#"{"n": 2, "constraints": [{"set": [1], "p": "3/2"}]}"#);
        assert!(matches!(err, Err(Error::ProbabilityOutOfRange { .. })));
        let err = parse_instance(r#"{"n": 2, "constraints": [{"set": [], "p": "1/2"}]}"#);
        assert_eq!(err, Err(Error::EmptySet));
        let err = parse_instance(
            r#"{"n": 2, "constraints": [{"set": [1], "p": "1/2"}, {"set": [1], "p": "1/2"}]}"#,
        );
        assert!(matches!(err, Err(Error::DuplicateSet(_))));
        let err = parse_instance(r#"{"n": 21, "constraints": [{"set": [1], "p": "1/2"}]}"#);
        assert!(matches!(err, Err(Error::GroundSetTooLarge { .. })));
        assert!(matches!(
            parse_instance("{\"n\": 2"),
            Err(Error::MalformedDocument(_))
        ));
        assert!(matches!(
            parse_instance(r#"{"n": 2, "constraints": [{"set": [1], "p": "x"}]}"#),
            Err(Error::MalformedRational(_))
        ));
    }

    #[test]
    fn canonical_document_round_trips() {
        let inst = parse_instance(TWO_EVENTS).unwrap();
        let text = instance_to_json(&inst);
        assert_eq!(parse_instance(&text).unwrap(), inst);
        assert_eq!(instance_to_json(&parse_instance(&text).unwrap()), text);
    }

    #[test]
    fn family_from_either_document() {
        let from_instance = parse_family(TWO_EVENTS).unwrap();
        let from_sets = parse_family(r#"{"n": 2, "sets": [[1], [2], [2, 1]]}"#).unwrap();
        assert_eq!(from_instance, from_sets);
        assert_eq!(
            parse_family(&family_to_json(&from_sets)).unwrap(),
            from_sets
        );
        assert!(parse_family(r#"{"n": 2}"#).is_err());
    }

    #[test]
    fn atoms_round_trip() {
        let text = r#"{"n": 2, "atoms": [{"set": [], "x": "1/4"}, {"set": [1, 2], "x": "3/4"}]}"#;
        let x = parse_atoms(text).unwrap();
        assert_eq!(x.union_probability(), rat(3, 4));
        assert_eq!(parse_atoms(&atoms_to_json(&x)).unwrap(), x);
    }
}
