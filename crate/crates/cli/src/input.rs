//! Facet-file parsing and generator pseudo-paths.
//!
//! The facet format is UTF-8 text: one facet per line, vertices as
//! whitespace-separated tokens, `#` starts a comment to end of line, blank
//! lines are ignored. Inputs may also name a built-in generator through a
//! pseudo-path such as `gen:rp2`, `gen:simplex:3`, `gen:boundary-simplex:4`
//! or `gen:random:seed=7,n=8,dim=3,f=6`.

use std::fs;
use std::path::Path;

use serre_core::generators::{boundary_simplex, random_complex, rp2_minimal, simplex, RandomSpec};
use serre_core::{Complex, Error as CoreError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read '{path}': {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("bad generator parameter in '{0}'")]
    BadGeneratorParameter(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// A parsed input with its display identity and an optional warning.
pub struct LoadedComplex {
    pub complex: Complex,
    pub identity: String,
    pub warning: Option<String>,
}

/// Parses facet-format text into a canonical complex. The boolean reports
/// whether the file was empty after comment stripping.
pub fn parse_facet_text(text: &str) -> (Complex, bool) {
    let mut raw: Vec<Vec<String>> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if !tokens.is_empty() {
            raw.push(tokens);
        }
    }
    let empty = raw.is_empty();
    (Complex::from_facets(&raw), empty)
}

pub fn parse_facet_file(path: &Path) -> Result<(Complex, bool), InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_facet_text(&text))
}

/// Renders a complex back into facet format. The void complex becomes an
/// empty file; the empty complex `{∅}` has no representation and errors.
pub fn facet_file_contents(k: &Complex) -> Result<String, CoreError> {
    if k.is_empty_complex() {
        return Err(CoreError::UnrepresentableComplex);
    }
    let mut out = String::new();
    for facet in k.facets() {
        let labels = k.face_labels(facet);
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    Ok(out)
}

/// Builds a complex from a generator spec, with or without the `gen:` prefix.
pub fn generator_complex(spec: &str) -> Result<Complex, InputError> {
    let body = spec.strip_prefix("gen:").unwrap_or(spec);
    let (name, rest) = match body.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (body, None),
    };
    let parse_int = |s: &str| -> Result<i64, InputError> {
        s.parse::<i64>()
            .map_err(|_| InputError::BadGeneratorParameter(spec.to_string()))
    };
    match (name, rest) {
        ("rp2", None) => Ok(rp2_minimal()),
        ("simplex", Some(n)) => {
            let n = parse_int(n)?;
            if n < 0 {
                return Err(InputError::BadGeneratorParameter(spec.to_string()));
            }
            Ok(simplex(n))
        }
        ("boundary-simplex", Some(n)) => {
            let n = parse_int(n)?;
            if n < 1 {
                return Err(InputError::BadGeneratorParameter(spec.to_string()));
            }
            Ok(boundary_simplex(n))
        }
        ("random", Some(kv)) => {
            let mut seed = None;
            let mut n = None;
            let mut dim = None;
            let mut f = None;
            for part in kv.split(',') {
                let Some((key, value)) = part.split_once('=') else {
                    return Err(InputError::BadGeneratorParameter(spec.to_string()));
                };
                let value = parse_int(value.trim())?;
                match key.trim() {
                    "seed" => seed = Some(value),
                    "n" => n = Some(value),
                    "dim" => dim = Some(value),
                    "f" => f = Some(value),
                    _ => return Err(InputError::BadGeneratorParameter(spec.to_string())),
                }
            }
            let (Some(seed), Some(n), Some(dim), Some(f)) = (seed, n, dim, f) else {
                return Err(InputError::BadGeneratorParameter(spec.to_string()));
            };
            if n < 1 || dim < 0 || dim >= n || f < 1 {
                return Err(InputError::BadGeneratorParameter(spec.to_string()));
            }
            Ok(random_complex(&RandomSpec {
                n_vertices: n as u32,
                max_dim: dim as u32,
                facet_count: f as u32,
                seed: seed as u64,
            }))
        }
        _ => Err(InputError::UnknownGenerator(spec.to_string())),
    }
}

/// Loads an input argument: a generator pseudo-path or a facet file.
pub fn load(input: &str) -> Result<LoadedComplex, InputError> {
    if input.starts_with("gen:") {
        let complex = generator_complex(input)?;
        return Ok(LoadedComplex {
            complex,
            identity: input.to_string(),
            warning: None,
        });
    }
    let (complex, empty) = parse_facet_file(Path::new(input))?;
    Ok(LoadedComplex {
        complex,
        identity: input.to_string(),
        warning: empty.then(|| format!("'{input}' is empty after comments; treating as the void complex")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_duplicates() {
        let (k, empty) = parse_facet_text("# note\na b\nb a\n");
        assert!(!empty);
        assert_eq!(k.facets().len(), 1);
        assert_eq!(k.n_vertices(), 2);
    }

    #[test]
    fn empty_after_comments_is_void() {
        let (k, empty) = parse_facet_text("# only a comment\n\n");
        assert!(empty);
        assert!(k.is_void());
    }

    #[test]
    fn round_trip_is_identity() {
        let (k, _) = parse_facet_text("a b c\nd e\n");
        let text = facet_file_contents(&k).unwrap();
        let (k2, _) = parse_facet_text(&text);
        assert_eq!(k, k2);
    }

    #[test]
    fn empty_complex_has_no_file_form() {
        assert!(matches!(
            facet_file_contents(&Complex::empty_complex()),
            Err(CoreError::UnrepresentableComplex)
        ));
        assert_eq!(facet_file_contents(&Complex::void()).unwrap(), "");
    }

    #[test]
    fn generator_specs() {
        assert_eq!(generator_complex("gen:rp2").unwrap().n_vertices(), 6);
        assert_eq!(generator_complex("simplex:2").unwrap().facets().len(), 1);
        assert_eq!(
            generator_complex("gen:boundary-simplex:3").unwrap().facets().len(),
            4
        );
        let r = generator_complex("gen:random:seed=7,n=8,dim=3,f=6").unwrap();
        assert!(r.facets().len() <= 6);
        assert!(generator_complex("gen:nope").is_err());
        assert!(generator_complex("gen:random:seed=7").is_err());
        assert!(generator_complex("gen:random:seed=7,n=8,dim=9,f=6").is_err());
    }
}
