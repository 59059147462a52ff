//! JSON input documents: a field, a graded quiver, and either a relation
//! list (algebra form) or a Coxeter word (preprojective form). Vertices are
//! 1-based in documents and 0-based internally.

use crate::algebra::{algebra_from_relations, GradedAlgebra, Relation};
use crate::quiver::{Arrow, Quiver};
use crate::scalar::Field;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    Fp { #[serde(rename = "Fp")] p: u64 },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldSpec::Name(s) if s == "Q" => Ok(Field::Rationals),
            FieldSpec::Name(s) => match s.strip_prefix('F').and_then(|t| t.parse::<u64>().ok()) {
                Some(p) => {
                    let f = Field::Fp(p);
                    f.validate()?;
                    Ok(f)
                }
                None => Err(Error::BadInput(format!("unknown field `{s}` (use \"Q\" or {{\"Fp\": p}})"))),
            },
            FieldSpec::Fp { p } => {
                let f = Field::Fp(*p);
                f.validate()?;
                Ok(f)
            }
        }
    }

    pub fn from_field(f: Field) -> FieldSpec {
        match f {
            Field::Rationals => FieldSpec::Name("Q".into()),
            Field::Fp(p) => FieldSpec::Fp { p },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    /// 1-based source vertex.
    pub from: usize,
    /// 1-based target vertex.
    pub to: usize,
    #[serde(default)]
    pub degree: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
}

/// One term `coef * path` of a relation; the path is a list of arrow names
/// composed left to right, the coefficient a decimal integer or "a/b".
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationTermSpec {
    pub coef: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Vec<RelationTermSpec>>>,
    /// 1-based vertex indices i with w = s_{i_1} s_{i_2} ...
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coxeter_word: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InputDocument {
    pub fn from_str(text: &str) -> Result<InputDocument> {
        let doc: InputDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn from_path(path: &std::path::Path) -> Result<InputDocument> {
        let text = std::fs::read_to_string(path)?;
        InputDocument::from_str(&text)
    }

    fn validate(&self) -> Result<()> {
        self.field.to_field()?;
        if self.relations.is_some() && self.coxeter_word.is_some() {
            return Err(Error::BadInput(
                "give either `relations` or `coxeter_word`, not both".into(),
            ));
        }
        for (i, a) in self.quiver.arrows.iter().enumerate() {
            for (end, label) in [(a.from, "from"), (a.to, "to")] {
                if end == 0 || end > self.quiver.vertices {
                    return Err(Error::BadInput(format!(
                        "arrow {} (`{}`): `{}` = {} is outside 1..={}",
                        i + 1,
                        a.name,
                        label,
                        end,
                        self.quiver.vertices
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self, override_field: Option<Field>) -> Result<Field> {
        match override_field {
            Some(f) => {
                f.validate()?;
                Ok(f)
            }
            None => self.field.to_field(),
        }
    }

    /// The quiver with 0-based vertex indices.
    pub fn build_quiver(&self) -> Result<Quiver> {
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                from: a.from - 1,
                to: a.to - 1,
                degree: a.degree,
            })
            .collect();
        Quiver::new(self.quiver.vertices, arrows)
    }

    /// The Coxeter word with 0-based letters.
    pub fn word(&self) -> Result<Vec<usize>> {
        let w = self
            .coxeter_word
            .as_ref()
            .ok_or_else(|| Error::BadInput("document has no `coxeter_word`".into()))?;
        w.iter()
            .enumerate()
            .map(|(k, &i)| {
                if i == 0 || i > self.quiver.vertices {
                    Err(Error::BadInput(format!(
                        "letter {} of the word: vertex {} is outside 1..={}",
                        k + 1,
                        i,
                        self.quiver.vertices
                    )))
                } else {
                    Ok(i - 1)
                }
            })
            .collect()
    }

    /// Build the graded algebra for the relations form.
    pub fn build_algebra(&self, field: Field, cap: usize) -> Result<Arc<GradedAlgebra>> {
        let q = self.build_quiver()?;
        let by_name: HashMap<&str, usize> = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.as_str(), i))
            .collect();
        if by_name.len() != q.arrows.len() {
            return Err(Error::BadInput("arrow names must be distinct".into()));
        }
        let specs = self.relations.clone().unwrap_or_default();
        let mut relations = Vec::new();
        for (r, terms) in specs.iter().enumerate() {
            let mut rel_terms = Vec::new();
            for (t, term) in terms.iter().enumerate() {
                let coef = field.parse(&term.coef).map_err(|e| {
                    Error::BadInput(format!("relation {}, term {}: {}", r + 1, t + 1, e))
                })?;
                let mut path = Vec::new();
                for name in &term.path {
                    let &idx = by_name.get(name.as_str()).ok_or_else(|| {
                        Error::BadInput(format!(
                            "relation {}, term {}: unknown arrow name `{}`",
                            r + 1,
                            t + 1,
                            name
                        ))
                    })?;
                    path.push(idx);
                }
                rel_terms.push((coef, path));
            }
            relations.push(Relation { terms: rel_terms });
        }
        algebra_from_relations(field, &q, relations, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
        "field": "Q",
        "quiver": {
            "vertices": 2,
            "arrows": [
                {"name": "a", "from": 1, "to": 1, "degree": 1},
                {"name": "b", "from": 1, "to": 2},
                {"name": "c", "from": 2, "to": 1, "degree": 2}
            ]
        },
        "relations": [
            [{"coef": "1", "path": ["a", "a"]}, {"coef": "-1", "path": ["b", "c"]}],
            [{"coef": "1", "path": ["a", "b"]}],
            [{"coef": "1", "path": ["c", "b"]}],
            [{"coef": "1", "path": ["c", "a"]}]
        ]
    }"#;

    #[test]
    fn parses_relation_form() {
        let doc = InputDocument::from_str(DOC).unwrap();
        let f = doc.field(None).unwrap();
        assert_eq!(f, Field::Rationals);
        let a = doc.build_algebra(f, 20).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.ell, 2);
    }

    #[test]
    fn field_override_and_fp_spec() {
        let doc = InputDocument::from_str(&DOC.replace("\"Q\"", "{\"Fp\": 5}")).unwrap();
        assert_eq!(doc.field(None).unwrap(), Field::Fp(5));
        assert_eq!(doc.field(Some(Field::Fp(3))).unwrap(), Field::Fp(3));
    }

    #[test]
    fn unknown_arrow_name_is_located() {
        let bad = DOC.replace("[{\"coef\": \"1\", \"path\": [\"a\", \"b\"]}]",
                              "[{\"coef\": \"1\", \"path\": [\"a\", \"z\"]}]");
        let doc = InputDocument::from_str(&bad).unwrap();
        let err = doc.build_algebra(Field::Rationals, 20).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("relation 2"), "{msg}");
        assert!(msg.contains("`z`"), "{msg}");
    }

    #[test]
    fn word_form_and_bounds() {
        let doc = InputDocument::from_str(
            r#"{"field": "Q",
                "quiver": {"vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}]},
                "coxeter_word": [2, 1]}"#,
        )
        .unwrap();
        assert_eq!(doc.word().unwrap(), vec![1, 0]);
        let bad = InputDocument::from_str(
            r#"{"field": "Q",
                "quiver": {"vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}]},
                "coxeter_word": [3]}"#,
        )
        .unwrap();
        assert!(bad.word().is_err());
    }
}
