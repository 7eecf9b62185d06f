//! Input decoding: structured JSON documents and bare 2x2 CSV.
//!
//! Every payoff entry travels as a rational string; no float ever enters the
//! pipeline. Parse errors name the offending entry with 1-based indices.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use zs2x2_core::{PayoffMatrix, Rational};

/// On-disk document shape: a 2x2 matrix of rational strings plus optional
/// metadata. Unknown keys are rejected so typos fail loudly.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDocument {
    #[serde(default)]
    id: Option<String>,
    #[serde(default)]
    description: Option<String>,
    matrix: [[String; 2]; 2],
}

/// A decoded game ready for the solver, with its metadata.
#[derive(Debug)]
pub struct GameInput {
    pub id: Option<String>,
    #[allow(dead_code)]
    pub description: Option<String>,
    pub matrix: PayoffMatrix,
}

/// Reads the whole input, from a file or from stdin when `path` is `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Decodes a single game. Content starting with `{` is treated as a JSON
/// document; anything else as bare CSV (`u11,u12` newline `u21,u22`).
pub fn parse_game(text: &str) -> Result<GameInput> {
    if text.trim_start().starts_with('{') {
        let doc: GameDocument = serde_json::from_str(text).context("parsing JSON document")?;
        document_to_input(doc)
    } else {
        parse_csv(text)
    }
}

/// Decodes a batch file: a JSON array of documents. Errors cite the index of
/// the failing element.
pub fn parse_batch(text: &str) -> Result<Vec<GameInput>> {
    let raw: Vec<serde_json::Value> =
        serde_json::from_str(text).context("parsing batch file as a JSON array")?;
    let mut games = Vec::with_capacity(raw.len());
    for (index, value) in raw.into_iter().enumerate() {
        let doc: GameDocument =
            serde_json::from_value(value).map_err(|err| anyhow!("game at index {index}: {err}"))?;
        let input =
            document_to_input(doc).map_err(|err| anyhow!("game at index {index}: {err:#}"))?;
        games.push(input);
    }
    Ok(games)
}

fn document_to_input(doc: GameDocument) -> Result<GameInput> {
    let [[a, b], [c, d]] = &doc.matrix;
    let matrix = PayoffMatrix::new(
        parse_entry(1, 1, a)?,
        parse_entry(1, 2, b)?,
        parse_entry(2, 1, c)?,
        parse_entry(2, 2, d)?,
    );
    Ok(GameInput {
        id: doc.id,
        description: doc.description,
        matrix,
    })
}

fn parse_csv(text: &str) -> Result<GameInput> {
    let rows: Vec<&str> = text
        .lines()
        .filter(|line| !line.trim().is_empty())
        .collect();
    if rows.len() != 2 {
        bail!("CSV input needs exactly 2 rows, found {}", rows.len());
    }
    let mut entries: Vec<Rational> = Vec::with_capacity(4);
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 2 {
            bail!(
                "CSV row {} needs exactly 2 cells, found {}",
                i + 1,
                cells.len()
            );
        }
        for (j, cell) in cells.iter().enumerate() {
            entries.push(parse_entry(i + 1, j + 1, cell)?);
        }
    }
    let mut it = entries.into_iter();
    let matrix = PayoffMatrix::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    );
    Ok(GameInput {
        id: None,
        description: None,
        matrix,
    })
}

fn parse_entry(i: usize, j: usize, raw: &str) -> Result<Rational> {
    raw.trim()
        .parse::<Rational>()
        .map_err(|err| anyhow!("entry ({i},{j}): {err}"))
}
