//! Per-series, per-order cache of `SeriesFile`s.
//!
//! A file `<ID>.order<N>.json` holds the series through `t^N`. Any cached
//! order at or above the request is used after truncation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::pipeline::SeriesId;
use crate::series::PowerSeries;

use super::format::SeriesFile;

pub fn file_name(id: SeriesId, order: usize) -> String {
    format!("{}.order{order}.json", id.name())
}

pub fn path_for(dir: &Path, id: SeriesId, order: usize) -> PathBuf {
    dir.join(file_name(id, order))
}

fn parse_name(name: &str) -> Option<(SeriesId, usize)> {
    let stem = name.strip_suffix(".json")?;
    let (id, order) = stem.rsplit_once(".order")?;
    if order.is_empty() || !order.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((id.parse().ok()?, order.parse().ok()?))
}

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("series");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

pub fn store(dir: &Path, id: SeriesId, s: &PowerSeries) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = path_for(dir, id, s.order());
    write_atomic(&path, &SeriesFile::from_series(id, s).to_json())?;
    Ok(path)
}

/// Cached orders for `id`, ascending.
pub fn cached_orders(dir: &Path, id: SeriesId) -> Result<Vec<usize>> {
    let mut orders = Vec::new();
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(orders),
        Err(e) => return Err(e.into()),
    };
    for entry in entries {
        let entry = entry?;
        if let Some((found, order)) = entry.file_name().to_str().and_then(parse_name) {
            if found == id {
                orders.push(order);
            }
        }
    }
    orders.sort_unstable();
    Ok(orders)
}

/// Reads and re-verifies one file: the contents must parse strictly, carry
/// the id and order of the file name, and re-serialize to the same bytes.
pub fn load_file(path: &Path, id: SeriesId, order: usize) -> Result<PowerSeries> {
    let text = fs::read_to_string(path)?;
    let (found, s) = SeriesFile::parse(&text)?;
    if found != id || s.order() != order {
        return Err(Error::CorruptedFile(format!(
            "{} holds {} at order {}",
            path.display(),
            found.name(),
            s.order()
        )));
    }
    if SeriesFile::from_series(id, &s).to_json() != text {
        return Err(Error::CorruptedFile(format!("{} is not in canonical form", path.display())));
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Exact,
    Truncated(usize),
    Miss,
}

/// The series through `t^order`, from the smallest sufficient cached file or
/// freshly computed (and stored) on a miss.
pub fn fetch(dir: &Path, id: SeriesId, order: usize) -> Result<(PowerSeries, Lookup)> {
    match cached_orders(dir, id)?.into_iter().find(|&o| o >= order) {
        Some(o) => {
            let s = load_file(&path_for(dir, id, o), id, o)?;
            let how = if o == order { Lookup::Exact } else { Lookup::Truncated(o) };
            Ok((s.truncate(order), how))
        }
        None => {
            let s = id.compute(order);
            store(dir, id, &s)?;
            Ok((s, Lookup::Miss))
        }
    }
}

/// Removes every cache file in `dir`; returns how many were removed.
pub fn clear(dir: &Path) -> Result<usize> {
    let mut removed = 0;
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    for entry in entries {
        let entry = entry?;
        if entry.file_name().to_str().and_then(parse_name).is_some() {
            fs::remove_file(entry.path())?;
            removed += 1;
        }
    }
    Ok(removed)
}
