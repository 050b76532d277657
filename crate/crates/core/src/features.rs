//! Grammatical categories, feature attributes and their validation.
//!
//! Schemas are read from a properties-definition text:
//!
//! ```text
//! # comment
//! V_Pers = 1 + 2 + 3;
//! N_Nb = s + p; N_Gender = m + f + as;
//! ```
//!
//! The part of an attribute name before the first `_` is the category it
//! belongs to (`V`, `N`, `A`, `PREP`, ...).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Category codes known to the system.
pub const CATEGORIES: &[&str] = &[
    "N", "V", "A", "ADV", "PREP", "CONJ", "PRO", "DET", "INTERJ", "NUM", "ONOM",
];

/// Tags used outside any attribute.
pub const DEFAULT_FREE_TAGS: &[&str] = &["UNAMB", "hypo_n", "geg", "ei", "NA"];

/// Keys allowed in `key=value` feature tokens.
pub const DEFAULT_VALUED_KEYS: &[&str] = &["val"];

/// Ordered set of feature tokens. Insertion order is kept for display.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeatureSet {
    values: Vec<String>,
}

impl FeatureSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `+a+b+c` (leading `+` optional).
    pub fn parse(text: &str) -> FeatureSet {
        let mut fs = FeatureSet::new();
        for v in text.split('+').map(str::trim).filter(|v| !v.is_empty()) {
            fs.insert(v);
        }
        fs
    }

    pub fn insert(&mut self, value: &str) -> bool {
        if self.contains(value) {
            return false;
        }
        self.values.push(value.to_string());
        true
    }

    pub fn contains(&self, value: &str) -> bool {
        self.values.iter().any(|v| v == value)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.values.iter().map(String::as_str)
    }

    /// Union keeping `self`'s order first.
    pub fn union(&self, other: &FeatureSet) -> FeatureSet {
        let mut out = self.clone();
        for v in other.iter() {
            out.insert(v);
        }
        out
    }

    pub fn is_superset(&self, other: &FeatureSet) -> bool {
        other.iter().all(|v| self.contains(v))
    }

    /// Order-insensitive equality.
    pub fn same_values(&self, other: &FeatureSet) -> bool {
        self.len() == other.len() && self.is_superset(other)
    }

    /// Value of a `key=value` token, if present.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.iter()
            .find_map(|v| v.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
    }
}

impl fmt::Display for FeatureSet {
    /// `+a+b+c`, or nothing for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "+{v}")?;
        }
        Ok(())
    }
}

impl<'a> FromIterator<&'a str> for FeatureSet {
    fn from_iter<I: IntoIterator<Item = &'a str>>(iter: I) -> Self {
        let mut fs = FeatureSet::new();
        for v in iter {
            fs.insert(v);
        }
        fs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attribute {
    pub name: String,
    pub category: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("line {line}: attribute `{name}` defined twice")]
    DuplicateAttribute { name: String, line: usize },
    #[error("line {line}: value `{value}` listed under both `{first}` and `{second}`")]
    ValueConflict {
        value: String,
        first: String,
        second: String,
        line: usize,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two values of one attribute in the same set.
    Exclusivity {
        attribute: String,
        values: Vec<String>,
    },
    UnknownValue {
        value: String,
        category: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Exclusivity { attribute, values } => {
                write!(f, "{} takes one value, got {}", attribute, values.join(", "))
            }
            Violation::UnknownValue { value, category } => {
                write!(f, "`{value}` is not a feature of {category}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureSchema {
    attributes: BTreeMap<String, Attribute>,
    free_tags: BTreeSet<String>,
    valued_keys: BTreeSet<String>,
    warnings: Vec<String>,
}

impl Default for FeatureSchema {
    fn default() -> Self {
        FeatureSchema {
            attributes: BTreeMap::new(),
            free_tags: DEFAULT_FREE_TAGS.iter().map(|s| s.to_string()).collect(),
            valued_keys: DEFAULT_VALUED_KEYS.iter().map(|s| s.to_string()).collect(),
            warnings: Vec::new(),
        }
    }
}

impl FeatureSchema {
    /// Parses a properties-definition text.
    pub fn load(text: &str) -> Result<FeatureSchema, SchemaError> {
        let mut schema = FeatureSchema::default();
        for (line_no, line) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let line = line.split('#').next().unwrap_or("");
            let mut statements: Vec<&str> = line.split(';').collect();
            // text after the last `;` must be blank: statements do not span lines
            let tail = statements.pop().unwrap_or("");
            if !tail.trim().is_empty() {
                return Err(SchemaError::Syntax {
                    line: line_no,
                    message: format!("missing `;` after `{}`", tail.trim()),
                });
            }
            for stmt in statements {
                if stmt.trim().is_empty() {
                    continue;
                }
                schema.add_statement(stmt, line_no)?;
            }
        }
        Ok(schema)
    }

    fn add_statement(&mut self, stmt: &str, line: usize) -> Result<(), SchemaError> {
        let (name, body) = stmt.split_once('=').ok_or_else(|| SchemaError::Syntax {
            line,
            message: format!("expected `Name = v + v` in `{}`", stmt.trim()),
        })?;
        let name = name.trim();
        let valid_name =
            !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_') && name.contains('_');
        if !valid_name {
            return Err(SchemaError::Syntax {
                line,
                message: format!("bad attribute name `{name}`"),
            });
        }
        if self.attributes.contains_key(name) {
            return Err(SchemaError::DuplicateAttribute {
                name: name.to_string(),
                line,
            });
        }
        let category = name.split('_').next().unwrap_or_default().to_string();
        let mut values: Vec<String> = Vec::new();
        for raw in body.split('+') {
            let v = raw.trim();
            if v.is_empty() || v.contains(char::is_whitespace) || v.contains('=') {
                return Err(SchemaError::Syntax {
                    line,
                    message: format!("bad value `{v}` in `{name}`"),
                });
            }
            if values.iter().any(|x| x == v) {
                let msg = format!("line {line}: `{v}` repeated in `{name}`, keeping one");
                self.warnings.push(msg);
                continue;
            }
            if let Some(other) = self.attribute_of(&category, v) {
                return Err(SchemaError::ValueConflict {
                    value: v.to_string(),
                    first: other.name.clone(),
                    second: name.to_string(),
                    line,
                });
            }
            values.push(v.to_string());
        }
        self.attributes.insert(
            name.to_string(),
            Attribute {
                name: name.to_string(),
                category,
                values,
            },
        );
        Ok(())
    }

    pub fn attribute(&self, name: &str) -> Option<&Attribute> {
        self.attributes.get(name)
    }

    pub fn attributes(&self) -> impl Iterator<Item = &Attribute> {
        self.attributes.values()
    }

    pub fn is_empty(&self) -> bool {
        self.attributes.is_empty()
    }

    /// Warnings raised while loading (duplicate values collapsed).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn add_free_tag(&mut self, tag: &str) {
        self.free_tags.insert(tag.to_string());
    }

    pub fn is_free_tag(&self, tag: &str) -> bool {
        self.free_tags.contains(tag)
    }

    fn attribute_of(&self, category: &str, value: &str) -> Option<&Attribute> {
        self.attributes
            .values()
            .find(|a| a.category == category && a.values.iter().any(|v| v == value))
    }

    /// Checks attribute exclusivity and that every value is known for `category`.
    pub fn validate(&self, fs: &FeatureSet, category: &str) -> Vec<Violation> {
        let mut violations = Vec::new();
        let mut seen: BTreeMap<&str, Vec<String>> = BTreeMap::new();
        for v in fs.iter() {
            if let Some(attr) = self.attribute_of(category, v) {
                seen.entry(attr.name.as_str()).or_default().push(v.to_string());
                continue;
            }
            let keyed = v
                .split_once('=')
                .is_some_and(|(k, val)| self.valued_keys.contains(k) && !val.is_empty());
            if !keyed && !self.is_free_tag(v) {
                violations.push(Violation::UnknownValue {
                    value: v.to_string(),
                    category: category.to_string(),
                });
            }
        }
        for (attribute, values) in seen {
            if values.len() > 1 {
                violations.push(Violation::Exclusivity {
                    attribute: attribute.to_string(),
                    values,
                });
            }
        }
        violations
    }
}

impl fmt::Display for FeatureSchema {
    /// One `Name = v + v;` line per attribute.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.attributes.values() {
            writeln!(f, "{} = {};", a.name, a.values.join(" + "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &str = include_str!("../data/tables/features.def");

    fn fs(s: &str) -> FeatureSet {
        FeatureSet::parse(s)
    }

    #[test]
    fn single_attribute() {
        let s = FeatureSchema::load("V_Pers = 1 + 2 + 3;").unwrap();
        let a = s.attribute("V_Pers").unwrap();
        assert_eq!(a.values, ["1", "2", "3"]);
        assert_eq!(a.category, "V");
    }

    #[test]
    fn empty_text() {
        assert!(FeatureSchema::load("").unwrap().is_empty());
    }

    #[test]
    fn repeated_value_collapsed_with_warning() {
        let s = FeatureSchema::load("N_Rasa = emer + rrjedh + gjin + kallez + dhan + rrjedh;").unwrap();
        assert_eq!(s.attribute("N_Rasa").unwrap().values.len(), 5);
        assert_eq!(s.warnings().len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            FeatureSchema::load("N_Nb = s + p;\nN_Nb = s;"),
            Err(SchemaError::DuplicateAttribute { line: 2, .. })
        ));
        assert!(matches!(
            FeatureSchema::load("N_Nb = s + p; N_X = s;"),
            Err(SchemaError::ValueConflict { .. })
        ));
        assert!(matches!(
            FeatureSchema::load("\n\nN_Nb s + p;"),
            Err(SchemaError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            FeatureSchema::load("N_Nb = s + p"),
            Err(SchemaError::Syntax { line: 1, .. })
        ));
        // the same value may live in attributes of different categories
        assert!(FeatureSchema::load("N_Nb = s + p; A_Nb = s + p;").is_ok());
    }

    #[test]
    fn shipped_table_contents() {
        let s = FeatureSchema::load(TABLE).unwrap();
        let vals = |n: &str| s.attribute(n).unwrap().values.join("+");
        assert_eq!(vals("V_Pers"), "1+2+3");
        assert_eq!(vals("V_Zgjedhimi"), "P+PP+PR+PS+I+F");
        assert_eq!(vals("V_Mënyra"), "Ind+Subj+Dëshirore+Habitore+IP+Kusht");
        assert_eq!(vals("V_Trajta"), "NA+veprore+joveprore");
        assert_eq!(vals("N_Gender"), "m+f+as");
        assert_eq!(vals("N_Rasa"), "emer+rrjedh+gjin+kallez+dhan");
        assert_eq!(vals("PREP_Rasa"), "emer+rrjedh+gjin+kallez");
        assert_eq!(vals("DET_Genre"), "m+f");
        assert_eq!(vals("PRO_Shquar"), "shquar+pashquar");
        assert_eq!(s.attributes().count(), 22);
    }

    #[test]
    fn validate_examples() {
        let s = FeatureSchema::load(TABLE).unwrap();
        assert!(s.validate(&fs("m+s+emer+shquar"), "N").is_empty());
        assert!(s.validate(&fs(""), "N").is_empty());
        let v = s.validate(&fs("emer+kallez"), "N");
        assert_eq!(
            v,
            [Violation::Exclusivity {
                attribute: "N_Rasa".into(),
                values: vec!["emer".into(), "kallez".into()]
            }]
        );
        assert!(s.validate(&fs("f+p+rrjedh+geg+pashquar"), "N").is_empty());
        assert!(s.validate(&fs("m+val=41"), "A").is_empty());
        assert!(!s.validate(&fs("dhan"), "PREP").is_empty());
        assert!(!s.validate(&fs("bogus"), "N").is_empty());
    }

    #[test]
    fn round_trip() {
        let s = FeatureSchema::load(TABLE).unwrap();
        let again = FeatureSchema::load(&s.to_string()).unwrap();
        assert_eq!(s.attributes, again.attributes);
    }

    #[test]
    fn feature_set_order_and_union() {
        let a = fs("+m+s");
        let b = fs("+emer+shquar+m");
        let u = a.union(&b);
        assert_eq!(u.to_string(), "+m+s+emer+shquar");
        assert!(u.same_values(&fs("shquar+emer+s+m")));
        assert_eq!(fs("A+val=5").get("val"), Some("5"));
    }
}
