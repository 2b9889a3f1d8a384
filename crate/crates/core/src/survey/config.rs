use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Run settings, read from a `key = value` file. Blank lines and lines
/// starting with `#` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub r_bound: u64,
    pub k_list: Option<Vec<u64>>,
    pub jobs: Option<usize>,
    pub json_out: Option<PathBuf>,
    pub csv_out: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config { r_bound: 200, k_list: None, jobs: None, json_out: None, csv_out: None }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::invalid(format!("config: bad value for {key}: {v:?}")))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Config::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("config line {}: expected key = value", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "r_bound" => c.r_bound = parse_num(key, value)?,
                "k_list" => {
                    c.k_list = Some(
                        value
                            .split(',')
                            .map(|s| parse_num(key, s.trim()))
                            .collect::<Result<_>>()?,
                    )
                }
                "jobs" => c.jobs = Some(parse_num(key, value)?),
                "json_out" => c.json_out = Some(value.into()),
                "csv_out" => c.csv_out = Some(value.into()),
                _ => return Err(Error::invalid(format!("config: unknown key {key:?}"))),
            }
        }
        if c.jobs == Some(0) {
            return Err(Error::invalid("config: jobs must be positive"));
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        let c = Config::parse("# run\nr_bound = 97\nk_list=5, 7\njobs=2\ncsv_out = t.csv\n").unwrap();
        assert_eq!(c.r_bound, 97);
        assert_eq!(c.k_list, Some(vec![5, 7]));
        assert_eq!(c.jobs, Some(2));
        assert_eq!(c.csv_out, Some(PathBuf::from("t.csv")));
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("r_bound").is_err());
        assert!(Config::parse("jobs = 0").is_err());
    }
}
