//! Schema-versioned JSON documents: spectral data, twisted endomorphisms,
//! genus-2 ring fixtures, determinantal fixtures, and the append-only
//! experiment log records.
//!
//! Forms embed as the text syntax of [`crate::arith::parse`]
//! (`"3*x^2 + 1; twist=4"`); the coefficient field is a document-level
//! attribute.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arith::matrix::FormMatrix;
use crate::arith::parse::{parse_form, print_form};
use crate::arith::scalar::Field;
use crate::covers::Genus2ThetaRing;
use crate::detquartic::{AugmentedMat, LinForm, SymLinMat};
use crate::error::{Error, Result};
use crate::spectral::{
    BranchPoint, BranchReport, BranchTag, SpectralData, SplittingType, TwistedEndo,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDoc {
    Prime { p: u64 },
    Rational,
}

impl FieldDoc {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldDoc::Prime { p } => Field::prime(p),
            FieldDoc::Rational => Ok(Field::Rational),
        }
    }

    pub fn of(field: Field) -> FieldDoc {
        match field {
            Field::Prime(p) => FieldDoc::Prime { p },
            Field::Rational => FieldDoc::Rational,
        }
    }
}

fn check_header(schema_version: u32, kind: &str, expected: &str) -> Result<()> {
    if schema_version != SCHEMA_VERSION {
        return Err(Error::parse(
            "schema_version",
            format!("expected {SCHEMA_VERSION}, found {schema_version}"),
        ));
    }
    if kind != expected {
        return Err(Error::parse(
            "type",
            format!("expected `{expected}`, found `{kind}`"),
        ));
    }
    Ok(())
}

/// Spectral-curve coefficients `(s_1, ..., s_n)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralDataDoc {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub field: FieldDoc,
    pub n: u64,
    pub k: i64,
    pub s: Vec<String>,
}

impl SpectralDataDoc {
    pub fn of(data: &SpectralData) -> SpectralDataDoc {
        SpectralDataDoc {
            schema_version: SCHEMA_VERSION,
            kind: "spectral_data".into(),
            field: FieldDoc::of(data.field()),
            n: data.n(),
            k: data.k(),
            s: data.coefficients().iter().map(print_form).collect(),
        }
    }

    pub fn into_data(&self) -> Result<SpectralData> {
        check_header(self.schema_version, &self.kind, "spectral_data")?;
        let field = self.field.to_field()?;
        if self.s.len() as u64 != self.n {
            return Err(Error::parse(
                "s",
                format!("expected {} coefficients, found {}", self.n, self.s.len()),
            ));
        }
        let forms = self
            .s
            .iter()
            .map(|t| parse_form(t, field))
            .collect::<Result<Vec<_>>>()?;
        SpectralData::new(self.k, forms)
    }
}

/// A twisted endomorphism as the full expanded matrix of form texts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistedEndoDoc {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub field: FieldDoc,
    pub e: Vec<i64>,
    pub m: Vec<u64>,
    pub k: i64,
    pub entries: Vec<Vec<String>>,
}

impl TwistedEndoDoc {
    pub fn of(phi: &TwistedEndo) -> TwistedEndoDoc {
        let n = phi.rank() as usize;
        TwistedEndoDoc {
            schema_version: SCHEMA_VERSION,
            kind: "twisted_endo".into(),
            field: FieldDoc::of(phi.field()),
            e: phi.splitting_type().twists().to_vec(),
            m: phi.splitting_type().multiplicities().to_vec(),
            k: phi.k(),
            entries: (0..n)
                .map(|i| (0..n).map(|j| print_form(phi.entry(i, j))).collect())
                .collect(),
        }
    }

    pub fn into_endo(&self) -> Result<TwistedEndo> {
        check_header(self.schema_version, &self.kind, "twisted_endo")?;
        let field = self.field.to_field()?;
        let st = SplittingType::new(self.e.clone(), self.m.clone())?;
        let n = st.rank() as usize;
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            return Err(Error::parse(
                "entries",
                format!("expected a {n}x{n} matrix of forms"),
            ));
        }
        let mut forms = Vec::with_capacity(n * n);
        for row in &self.entries {
            for text in row {
                forms.push(parse_form(text, field)?);
            }
        }
        let mat = FormMatrix::new(n, n, forms)?;
        TwistedEndo::new(st, self.k, mat)
    }
}

/// Genus-2 canonical-cover ring fixture.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Genus2RingDoc {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub field: FieldDoc,
    pub b1: String,
    pub b2: String,
    pub l: String,
    pub includes_cover: bool,
}

impl Genus2RingDoc {
    pub fn of(ring: &Genus2ThetaRing) -> Genus2RingDoc {
        Genus2RingDoc {
            schema_version: SCHEMA_VERSION,
            kind: "genus2_theta_ring".into(),
            field: FieldDoc::of(ring.field()),
            b1: print_form(ring.b1()),
            b2: print_form(ring.b2()),
            l: print_form(ring.linear_form()),
            includes_cover: ring.includes_cover(),
        }
    }

    pub fn into_ring(&self) -> Result<Genus2ThetaRing> {
        check_header(self.schema_version, &self.kind, "genus2_theta_ring")?;
        let field = self.field.to_field()?;
        Genus2ThetaRing::new(
            parse_form(&self.b1, field)?,
            parse_form(&self.b2, field)?,
            parse_form(&self.l, field)?,
            self.includes_cover,
        )
    }
}

/// Determinantal fixture: integer coefficient triples for each entry of a
/// symmetric matrix of linear forms, plus the constant column. The field
/// is chosen at load time (a prime for point searches, or the rationals).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuarticFixtureDoc {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub name: String,
    pub d: usize,
    pub matrix: Vec<Vec<[i64; 3]>>,
    pub column: Vec<i64>,
}

impl QuarticFixtureDoc {
    pub fn validate(&self) -> Result<()> {
        check_header(self.schema_version, &self.kind, "sym_lin_mat")?;
        if self.matrix.len() != self.d || self.matrix.iter().any(|r| r.len() != self.d) {
            return Err(Error::parse(
                "matrix",
                format!("expected a {0}x{0} matrix of coefficient triples", self.d),
            ));
        }
        if self.column.len() != self.d {
            return Err(Error::parse("column", "length must match the matrix size"));
        }
        for i in 0..self.d {
            for j in 0..self.d {
                if self.matrix[i][j] != self.matrix[j][i] {
                    return Err(Error::invalid(
                        "matrix",
                        format!("entries ({i},{j}) and ({j},{i}) differ"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Reduce the integer fixture into a symmetric matrix over a field.
    pub fn matrix_over(&self, field: Field) -> Result<SymLinMat> {
        self.validate()?;
        let entries: Vec<Vec<LinForm>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&c| LinForm::from_ints(field, c)).collect())
            .collect();
        SymLinMat::from_entries(self.d, entries)
    }

    pub fn augmented_over(&self, field: Field) -> Result<AugmentedMat> {
        let base = self.matrix_over(field)?;
        let column = self.column.iter().map(|&c| field.from_int(c)).collect();
        AugmentedMat::new(base, column)
    }
}

/// Branching summary (forms as text, tags as snake_case strings, `x`
/// absent for the point at infinity).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BranchReportDoc {
    pub discriminant: String,
    pub squarefree: bool,
    pub classifications: Vec<ClassificationDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<u64>,
    pub tag: String,
}

impl BranchReportDoc {
    pub fn of(report: &BranchReport) -> BranchReportDoc {
        BranchReportDoc {
            discriminant: print_form(&report.discriminant),
            squarefree: report.squarefree,
            classifications: report
                .classifications
                .iter()
                .map(|(at, tag)| ClassificationDoc {
                    x: match at {
                        BranchPoint::Affine(x) => Some(*x),
                        BranchPoint::Infinity => None,
                    },
                    tag: match tag {
                        BranchTag::Flex => "flex",
                        BranchTag::Bitangent => "bitangent",
                        BranchTag::SingularCandidate => "singular_candidate",
                        BranchTag::UnresolvedOverExtension => "unresolved_over_extension",
                    }
                    .into(),
                })
                .collect(),
        }
    }
}

/// One line of the append-only JSONL experiment log. Records are
/// self-contained: the command and full parameter set re-run to the same
/// payload.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub schema_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp_ms: Option<u64>,
    pub command: String,
    pub params: serde_json::Value,
    pub result: serde_json::Value,
    pub elapsed_ms: u64,
}

pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

/// Fixtures bundled with the crate, addressable by name from the CLI.
pub fn builtin_fixture(name: &str) -> Option<&'static str> {
    match name {
        "beauville-genus3" => Some(include_str!("../fixtures/beauville-genus3.json")),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::companion;

    #[test]
    fn spectral_data_document_round_trip() {
        let data = SpectralData::random(3, 2, 1009, 11).unwrap();
        let doc = SpectralDataDoc::of(&data);
        let text = to_json_string(&doc);
        let parsed: SpectralDataDoc = from_json_str(&text).unwrap();
        assert_eq!(parsed.into_data().unwrap(), data);
    }

    #[test]
    fn twisted_endo_document_round_trip() {
        let data = SpectralData::random(3, 1, 1009, 4).unwrap();
        let phi = companion(&data, 2);
        let doc = TwistedEndoDoc::of(&phi);
        let text = to_json_string(&doc);
        let parsed: TwistedEndoDoc = from_json_str(&text).unwrap();
        assert_eq!(parsed.into_endo().unwrap(), phi);
    }

    #[test]
    fn genus2_ring_document_round_trip() {
        let ring = Genus2ThetaRing::random(1009, 3, true).unwrap();
        let doc = Genus2RingDoc::of(&ring);
        let parsed: Genus2RingDoc = from_json_str(&to_json_string(&doc)).unwrap();
        assert_eq!(parsed.into_ring().unwrap(), ring);
    }

    #[test]
    fn schema_version_checked() {
        let data = SpectralData::random(2, 1, 7, 0).unwrap();
        let mut doc = SpectralDataDoc::of(&data);
        doc.schema_version = 99;
        assert!(doc.into_data().is_err());
    }

    #[test]
    fn fixture_symmetry_checked() {
        let mut doc = QuarticFixtureDoc {
            schema_version: SCHEMA_VERSION,
            kind: "sym_lin_mat".into(),
            name: "test".into(),
            d: 3,
            matrix: vec![vec![[0, 0, 0]; 3]; 3],
            column: vec![0, 0, 1],
        };
        assert!(doc.validate().is_ok());
        doc.matrix[0][1] = [1, 0, 0];
        assert!(doc.validate().is_err());
    }
}
