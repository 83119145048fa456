//! Reading one column of numbers from a text file.

use std::path::Path;

use crate::error::{CliError, Result};

/// Which field of a line holds the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Column {
    /// The whole line.
    Whole,
    /// 1-based comma-separated field.
    Index(usize),
    /// Field under this name in the first (header) line.
    Name(String),
}

impl Column {
    pub fn parse(s: Option<&str>) -> Result<Column> {
        match s {
            None => Ok(Column::Whole),
            Some(s) => match s.trim().parse::<usize>() {
                Ok(0) => Err(CliError::Usage("--col indices start at 1".into())),
                Ok(i) => Ok(Column::Index(i)),
                Err(_) => Ok(Column::Name(s.trim().to_string())),
            },
        }
    }
}

pub fn read_values(path: &Path, col: &Column) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_values(&text, col).map_err(|(line, message)| CliError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    })
}

/// Parses values, skipping blank lines and lines starting with `#`.
/// Errors carry the 1-based line number.
pub fn parse_values(text: &str, col: &Column) -> std::result::Result<Vec<f64>, (usize, String)> {
    let mut values = Vec::new();
    let mut index = match col {
        Column::Index(i) => Some(i - 1),
        _ => None,
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let field = match (col, index) {
            (Column::Whole, _) => line,
            (Column::Name(name), None) => {
                let pos = line.split(',').position(|f| f.trim() == name);
                match pos {
                    Some(p) => index = Some(p),
                    None => return Err((line_no, format!("header has no column `{name}`"))),
                }
                continue;
            }
            (_, Some(k)) => match line.split(',').nth(k) {
                Some(f) => f.trim(),
                None => return Err((line_no, format!("line has no column {}", k + 1))),
            },
            (Column::Index(_), None) => unreachable!(),
        };
        let value = field
            .parse::<f64>()
            .map_err(|_| (line_no, format!("`{field}` is not a number")))?;
        values.push(value);
    }
    Ok(values)
}

/// Splits `1000,2000,4000` into integers.
pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid {what} `{}` in `{s}`", p.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_blanks_and_comments() {
        let text = "# header\n1.5\n\n  -2 \n# note\n3e2\n";
        assert_eq!(
            parse_values(text, &Column::Whole).unwrap(),
            vec![1.5, -2.0, 300.0]
        );
    }

    #[test]
    fn reports_line_number() {
        let (line, msg) = parse_values("1\n2\nabc\n", &Column::Whole).unwrap_err();
        assert_eq!(line, 3);
        assert!(msg.contains("abc"));
    }

    #[test]
    fn non_finite_tokens_parse() {
        let v = parse_values("nan\ninf\n", &Column::Whole).unwrap();
        assert!(v[0].is_nan() && v[1].is_infinite());
    }

    #[test]
    fn columns_by_index_and_name() {
        let text = "id,x,y\n1,0.5,7\n2,1.5,8\n";
        assert_eq!(
            parse_values(text, &Column::Name("y".into())).unwrap(),
            vec![7.0, 8.0]
        );
        assert_eq!(
            parse_values("1,0.5\n2,1.5\n", &Column::Index(2)).unwrap(),
            vec![0.5, 1.5]
        );
        assert_eq!(parse_values("1\n", &Column::Index(2)).unwrap_err().0, 1);
        assert_eq!(
            parse_values(text, &Column::Name("z".into())).unwrap_err().0,
            1
        );
    }

    #[test]
    fn column_flag() {
        assert_eq!(Column::parse(None).unwrap(), Column::Whole);
        assert_eq!(Column::parse(Some("3")).unwrap(), Column::Index(3));
        assert_eq!(Column::parse(Some("x")).unwrap(), Column::Name("x".into()));
        assert!(Column::parse(Some("0")).is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(
            parse_list::<usize>("10, 20,40", "n").unwrap(),
            vec![10, 20, 40]
        );
        assert!(parse_list::<usize>("10,x", "n").is_err());
    }
}
