//! Line-oriented text format for qubit-qudit states.
//!
//! ```text
//! dims 2 <d>
//! flags nonnormal        # optional
//! <re>,<im> <re>,<im> ...   # 2d rows of 2d entries
//! ```
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, HERMITIAN_TOL};
use crate::states::{DensityMatrix, NonNormalState};

/// Raw contents of a state file before validation.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFile {
    pub d: usize,
    pub nonnormal: bool,
    pub matrix: ComplexMatrix,
}

/// A state file after validation.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadedState {
    Valid(DensityMatrix),
    NonNormal(NonNormalState),
}

struct Cursor<'a> {
    path: &'a str,
}

impl Cursor<'_> {
    fn err(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.to_string(),
            line,
            column,
            message: message.into(),
        }
    }
}

/// Splits a line into tokens with their 1-based starting columns, dropping comments.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (body[..s].chars().count() + 1, t))
        .collect()
}

fn parse_entry(cur: &Cursor, line: usize, col: usize, tok: &str) -> Result<Complex64> {
    let (re, im) = tok
        .split_once(',')
        .ok_or_else(|| cur.err(line, col, format!("expected <re>,<im>, found `{tok}`")))?;
    let re: f64 = re
        .parse()
        .map_err(|_| cur.err(line, col, format!("invalid real part `{re}`")))?;
    let im_col = col + tok.find(',').unwrap() + 1;
    let im: f64 = im
        .parse()
        .map_err(|_| cur.err(line, im_col, format!("invalid imaginary part `{im}`")))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(cur.err(line, col, "entries must be finite"));
    }
    Ok(Complex64::new(re, im))
}

/// Parses the text of a state file. `path` is used only in diagnostics.
pub fn parse_state(text: &str, path: &str) -> Result<StateFile> {
    let cur = Cursor { path };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());

    let (ln, head) = lines
        .next()
        .ok_or_else(|| cur.err(1, 1, "empty file, expected `dims 2 <d>`"))?;
    let d = match head.as_slice() {
        [(_, "dims"), (c2, two), (c3, d)] => {
            if *two != "2" {
                return Err(cur.err(ln, *c2, format!("first subsystem must be a qubit, found `{two}`")));
            }
            let d: usize = d
                .parse()
                .map_err(|_| cur.err(ln, *c3, format!("invalid dimension `{d}`")))?;
            if d < 2 {
                return Err(cur.err(ln, *c3, format!("qudit dimension must be at least 2, found {d}")));
            }
            d
        }
        _ => return Err(cur.err(ln, head[0].0, "expected header `dims 2 <d>`")),
    };
    let n = 2 * d;

    let mut nonnormal = false;
    let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut last_line = ln;
    for (ln, toks) in lines {
        last_line = ln;
        if toks[0].1 == "flags" {
            if !rows.is_empty() || nonnormal {
                return Err(cur.err(ln, toks[0].0, "`flags` must directly follow the header"));
            }
            for &(c, f) in &toks[1..] {
                match f {
                    "nonnormal" => nonnormal = true,
                    _ => return Err(cur.err(ln, c, format!("unknown flag `{f}`"))),
                }
            }
            continue;
        }
        if rows.len() == n {
            return Err(cur.err(ln, toks[0].0, format!("expected {n} rows, found more")));
        }
        if toks.len() != n {
            let col = toks.get(n).map_or(toks.last().unwrap().0, |t| t.0);
            return Err(cur.err(ln, col, format!("expected {n} entries, found {}", toks.len())));
        }
        let row = toks
            .iter()
            .map(|&(c, t)| parse_entry(&cur, ln, c, t))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(cur.err(
            last_line + 1,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    let matrix = ComplexMatrix::from_vec(n, rows.into_iter().flatten().collect())?;
    Ok(StateFile { d, nonnormal, matrix })
}

impl StateFile {
    /// Validates the parsed matrix with Hermiticity and trace tolerance `tol`.
    ///
    /// A `nonnormal` file is accepted only if it is the tabulated ha24 matrix.
    pub fn validate(self, tol: f64) -> Result<LoadedState> {
        if self.nonnormal {
            if let Some(s) = NonNormalState::recognize(&self.matrix) {
                return Ok(LoadedState::NonNormal(s));
            }
        }
        match DensityMatrix::with_tolerance(self.matrix, self.d, tol) {
            Ok(rho) => Ok(LoadedState::Valid(rho)),
            Err(e) if self.nonnormal => Err(Error::domain(format!(
                "`flags nonnormal` is only accepted for a matrix with a tabulated spectrum; {e}"
            ))),
            Err(e) => Err(e),
        }
    }
}

/// Reads, parses and validates a state file.
pub fn load_state(path: &Path, tol: f64) -> Result<LoadedState> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    parse_state(&text, &shown)?.validate(tol)
}

/// Default validation tolerance for files.
pub const DEFAULT_FILE_TOL: f64 = HERMITIAN_TOL;

/// Renders a matrix in the state-file format. Floats use shortest round-trip form.
pub fn write_state(matrix: &ComplexMatrix, d: usize, nonnormal: bool) -> String {
    let mut s = format!("dims 2 {d}\n");
    if nonnormal {
        s.push_str("flags nonnormal\n");
    }
    for i in 0..matrix.n() {
        let row: Vec<String> = (0..matrix.n())
            .map(|j| {
                let z = matrix[(i, j)];
                format!("{},{}", z.re, z.im)
            })
            .collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{ha24_matrix, sigma1, varsigma24};

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_state(text, "t") {
            Err(Error::Parse {
                line,
                column,
                message,
                ..
            }) => (line, column, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_sigma1() {
        let rho = sigma1();
        let text = write_state(rho.matrix(), 2, false);
        let f = parse_state(&text, "s").unwrap();
        assert_eq!(f.d, 2);
        assert_eq!(&f.matrix, rho.matrix());
        assert!(matches!(f.validate(1e-9).unwrap(), LoadedState::Valid(_)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n dims 2 2 # qubit-qubit\n\n0.25,0 0,0 0,0 0,0\n0,0 0.25,0 0,0 0,0 # row 2\n0,0 0,0 0.25,0 0,0\n0,0 0,0 0,0 0.25,0\n";
        let f = parse_state(text, "t").unwrap();
        assert_eq!(f.matrix, ComplexMatrix::identity(4).scale(0.25));
    }

    #[test]
    fn bad_token_reports_position() {
        let text = "dims 2 2\n0.25,0 0,0 0,0 0,0\n0,0 0.25,x 0,0 0,0\n";
        let (line, col, msg) = parse_err(text);
        assert_eq!((line, col), (3, 10));
        assert!(msg.contains("imaginary"));

        let (line, col, _) = parse_err("dims 2 2\n0.25 0,0 0,0 0,0\n");
        assert_eq!((line, col), (2, 1));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(parse_err("").0, 1);
        assert_eq!(parse_err("dims 3 2\n").1, 6);
        assert_eq!(parse_err("dims 2 1\n").1, 8);
        let (line, _, msg) = parse_err("dims 2 2\n0,0 0,0 0,0\n");
        assert_eq!(line, 2);
        assert!(msg.contains("expected 4 entries"));
        let (_, _, msg) = parse_err("dims 2 2\n0,0 0,0 0,0 0,0\n");
        assert!(msg.contains("expected 4 rows"));
        let (line, col, _) = parse_err("dims 2 2\nflags weird\n");
        assert_eq!((line, col), (2, 7));
    }

    #[test]
    fn non_hermitian_rejected_unless_flagged_ha24() {
        let text = write_state(&ha24_matrix(), 4, false);
        let err = parse_state(&text, "h").unwrap().validate(1e-9).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));

        let text = write_state(&ha24_matrix(), 4, true);
        let loaded = parse_state(&text, "h").unwrap().validate(1e-9).unwrap();
        assert!(matches!(loaded, LoadedState::NonNormal(_)));
    }

    #[test]
    fn flag_on_unknown_matrix_is_an_error() {
        let mut m = ha24_matrix();
        m[(0, 0)] += Complex64::new(0.01, 0.0);
        let text = write_state(&m, 4, true);
        assert!(matches!(
            parse_state(&text, "h").unwrap().validate(1e-9),
            Err(Error::Domain(_))
        ));
        // A valid state with the flag still loads.
        let rho = varsigma24(1.0).unwrap();
        let text = write_state(rho.matrix(), 4, true);
        assert!(matches!(
            parse_state(&text, "v").unwrap().validate(1e-9).unwrap(),
            LoadedState::Valid(_)
        ));
    }
}
