//! Text, CSV and JSON renderings of a series, and the `SeriesFile` format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pipeline::SeriesId;
use crate::rational::{parse_canonical, to_canonical};
use crate::series::PowerSeries;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// On-disk and `--format json` representation of a series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    pub schema_version: u32,
    pub series_id: String,
    pub order: usize,
    pub coefficients: Vec<String>,
}

impl SeriesFile {
    pub fn from_series(id: SeriesId, s: &PowerSeries) -> Self {
        SeriesFile {
            schema_version: SCHEMA_VERSION,
            series_id: id.name().to_string(),
            order: s.order(),
            coefficients: s.coefficients().iter().map(to_canonical).collect(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain struct serializes");
        s.push('\n');
        s
    }

    /// Strict parse: schema version, known id, length `order + 1` and
    /// canonical rationals are all checked.
    pub fn parse(text: &str) -> Result<(SeriesId, PowerSeries)> {
        let file: SeriesFile =
            serde_json::from_str(text).map_err(|e| Error::CorruptedFile(e.to_string()))?;
        file.decode()
    }

    pub fn decode(&self) -> Result<(SeriesId, PowerSeries)> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaMismatch { expected: SCHEMA_VERSION, found: self.schema_version });
        }
        let id: SeriesId = self.series_id.parse()?;
        if self.coefficients.len() != self.order + 1 {
            return Err(Error::CorruptedFile(format!(
                "{} coefficients for order {}",
                self.coefficients.len(),
                self.order
            )));
        }
        let coeffs = self.coefficients.iter().map(|c| parse_canonical(c)).collect::<Result<Vec<_>>>()?;
        Ok((id, PowerSeries::new(coeffs)))
    }
}

pub fn render(id: SeriesId, s: &PowerSeries, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("# {} through t^{}\n", id.name(), s.order());
            for (k, c) in s.coefficients().iter().enumerate() {
                out.push_str(&format!("{k}\t{}\n", to_canonical(c)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (k, c) in s.coefficients().iter().enumerate() {
                out.push_str(&format!("{k},{}\n", to_canonical(c)));
            }
            out
        }
        Format::Json => SeriesFile::from_series(id, s).to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::q_series;

    #[test]
    fn round_trip() {
        let q = q_series(8);
        let text = SeriesFile::from_series(SeriesId::Q, &q).to_json();
        assert!(text.ends_with('\n'));
        assert_eq!(SeriesFile::parse(&text).unwrap(), (SeriesId::Q, q));
    }

    #[test]
    fn rejects_bad_files() {
        let mut f = SeriesFile::from_series(SeriesId::N0, &crate::pipeline::n0_series(2));
        f.schema_version = 2;
        assert!(matches!(SeriesFile::parse(&f.to_json()), Err(Error::SchemaMismatch { .. })));
        f.schema_version = 1;
        f.coefficients[1] = "48/2".into();
        assert!(matches!(SeriesFile::parse(&f.to_json()), Err(Error::MalformedRational(_))));
        f.coefficients.pop();
        assert!(matches!(SeriesFile::parse(&f.to_json()), Err(Error::CorruptedFile(_))));
        assert!(matches!(SeriesFile::parse("{"), Err(Error::CorruptedFile(_))));
    }

    #[test]
    fn csv_layout() {
        let s = render(SeriesId::N0, &crate::pipeline::n0_series(3), Format::Csv);
        assert_eq!(s, "degree,coefficient\n0,1\n1,24\n2,324\n3,3200\n");
    }
}
