//! The plain-text algebra document format.
//!
//! A document declares a field and a dimension, then lists basis products:
//!
//! ```text
//! # anything after a hash is a comment
//! field rational
//! dim 3
//! e1 * e1 = e2
//! e1 * e3 = e2 + 2 e3
//! ```
//!
//! The first statement must be `field rational` or `field gf <p>`; the
//! second must be `dim <n>`. Under the default `symmetric on` directive a
//! product `e_i * e_j` also declares `e_j * e_i`, unless that pair is
//! stated explicitly somewhere in the document; `symmetric off` turns the
//! mirroring off for the statements that follow. Coefficients are integers
//! or fractions `p/q` (fractions only over the rationals); a bare `e<k>`
//! carries coefficient 1, and `= 0` declares a zero product. Restating a
//! pair that was already given explicitly is an error.
//!
//! Parse errors carry the 1-based line and column of the offending token.

use std::fmt;

use mock_lie::algebra::StructureTensor;
use mock_lie::field::{FieldDescriptor, Scalar};

/// A syntax or semantic error in an algebra document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line of the offending token.
    pub line: usize,
    /// 1-based column of the offending token.
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Cursor over one comment-stripped line.
struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(text: &str, line: usize) -> Cursor {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col(),
            message: message.into(),
        }
    }

    fn error_at(&self, col: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.chars.len()
    }

    fn expect(&mut self, wanted: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == wanted => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{wanted}', found '{c}'"))),
            None => Err(self.error(format!("expected '{wanted}', found end of line"))),
        }
    }

    /// One or more ASCII digits.
    fn digits(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let col = self.col();
        let text = self.digits()?;
        text.parse()
            .map_err(|_| self.error_at(col, format!("number {text} is too large")))
    }

    /// A lowercase keyword.
    fn word(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '-') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// A basis token `e<index>`, validated against the dimension.
    fn basis_index(&mut self, dim: usize) -> Result<usize, ParseError> {
        let col = self.col();
        self.expect('e')
            .map_err(|_| self.error_at(col, "expected a basis vector like e1"))?;
        let index = self.number().map_err(|e| ParseError {
            message: String::from("expected a basis index after 'e'"),
            ..e
        })?;
        if index == 0 || index > dim {
            return Err(self.error_at(
                col,
                format!("basis index e{index} out of range for dimension {dim}"),
            ));
        }
        Ok(index)
    }

    /// An optional scalar literal (integer or fraction), as raw text.
    fn scalar_text(&mut self) -> Result<Option<String>, ParseError> {
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok(None);
        }
        let mut text = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            text.push('/');
            text.push_str(&self.digits()?);
        }
        Ok(Some(text))
    }
}

struct ProductStatement {
    i: usize,
    j: usize,
    terms: Vec<(usize, Scalar)>,
    mirrored: bool,
    line: usize,
    col: usize,
}

/// Parses an algebra document into its structure tensor.
pub fn parse(text: &str) -> Result<StructureTensor, ParseError> {
    let mut field: Option<FieldDescriptor> = None;
    let mut dim: Option<usize> = None;
    let mut symmetric = true;
    let mut statement_count = 0usize;
    let mut products: Vec<ProductStatement> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut cur = Cursor::new(content, index + 1);
        if cur.at_end() {
            continue;
        }
        let statement_col = cur.col();
        if statement_count == 0 {
            let word = cur.word();
            if word != "field" {
                return Err(
                    cur.error_at(statement_col, "the first statement must declare the field")
                );
            }
            cur.skip_ws();
            let kind_col = cur.col();
            match cur.word().as_str() {
                "rational" => field = Some(FieldDescriptor::Rationals),
                "gf" => {
                    cur.skip_ws();
                    let p_col = cur.col();
                    let p = cur.number()?;
                    let descriptor = FieldDescriptor::prime_field(p as u64)
                        .map_err(|e| cur.error_at(p_col, e.to_string()))?;
                    field = Some(descriptor);
                }
                other => {
                    return Err(cur.error_at(
                        kind_col,
                        format!("expected 'rational' or 'gf <p>', found '{other}'"),
                    ));
                }
            }
        } else if statement_count == 1 {
            let word = cur.word();
            if word != "dim" {
                return Err(cur.error_at(
                    statement_col,
                    "the second statement must declare the dimension",
                ));
            }
            cur.skip_ws();
            dim = Some(cur.number()?);
        } else if matches!(cur.peek(), Some('e'))
            && matches!(cur.chars.get(cur.pos + 1), Some(c) if c.is_ascii_digit())
        {
            let n = dim.expect("dimension is set after two statements");
            let f = field.expect("field is set after two statements");
            let i = cur.basis_index(n)?;
            cur.skip_ws();
            cur.expect('*')?;
            cur.skip_ws();
            let j = cur.basis_index(n)?;
            cur.skip_ws();
            cur.expect('=')?;
            cur.skip_ws();
            let mut terms = Vec::new();
            if cur.peek() == Some('0') {
                cur.bump();
                if !cur.at_end() {
                    return Err(cur.error("a zero product cannot carry further terms"));
                }
            } else {
                let mut first = true;
                loop {
                    cur.skip_ws();
                    let mut negative = false;
                    match cur.peek() {
                        Some('-') => {
                            cur.bump();
                            negative = true;
                        }
                        Some('+') => {
                            if first {
                                return Err(cur.error("a leading '+' is not allowed"));
                            }
                            cur.bump();
                        }
                        _ if first => {}
                        _ => unreachable!("separator guaranteed by loop exit check"),
                    }
                    cur.skip_ws();
                    let coeff_col = cur.col();
                    let coeff = match cur.scalar_text()? {
                        Some(text) => Scalar::parse(&text, f)
                            .map_err(|e| cur.error_at(coeff_col, e.to_string()))?,
                        None => Scalar::one(f),
                    };
                    cur.skip_ws();
                    let k = cur.basis_index(n)?;
                    terms.push((k, if negative { coeff.negated() } else { coeff }));
                    first = false;
                    if cur.at_end() {
                        break;
                    }
                    if !matches!(cur.peek(), Some('+') | Some('-')) {
                        return Err(cur.error("expected '+', '-', or end of statement"));
                    }
                }
            }
            products.push(ProductStatement {
                i,
                j,
                terms,
                mirrored: symmetric,
                line: index + 1,
                col: statement_col,
            });
        } else {
            match cur.word().as_str() {
                "symmetric" => {
                    cur.skip_ws();
                    let mode_col = cur.col();
                    match cur.word().as_str() {
                        "on" => symmetric = true,
                        "off" => symmetric = false,
                        other => {
                            return Err(cur.error_at(
                                mode_col,
                                format!("expected 'on' or 'off', found '{other}'"),
                            ));
                        }
                    }
                }
                "field" => {
                    return Err(cur.error_at(statement_col, "the field is already declared"));
                }
                "dim" => {
                    return Err(cur.error_at(statement_col, "the dimension is already declared"));
                }
                other => {
                    return Err(cur.error_at(statement_col, format!("unknown statement '{other}'")));
                }
            }
        }
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing characters"));
        }
        statement_count += 1;
    }

    let Some(f) = field else {
        return Err(ParseError {
            line: 1,
            col: 1,
            message: String::from("empty document: expected a field declaration"),
        });
    };
    let n = dim.expect("dim statement follows the field statement");

    // explicit statements win over mirrored ones regardless of order
    let mut explicit: std::collections::BTreeMap<(usize, usize), &ProductStatement> =
        std::collections::BTreeMap::new();
    for statement in &products {
        if explicit
            .insert((statement.i, statement.j), statement)
            .is_some()
        {
            return Err(ParseError {
                line: statement.line,
                col: statement.col,
                message: format!(
                    "duplicate product statement for e{} * e{}",
                    statement.i, statement.j
                ),
            });
        }
    }
    let mut resolved: std::collections::BTreeMap<(usize, usize), Vec<(usize, Scalar)>> =
        std::collections::BTreeMap::new();
    for (&(i, j), statement) in &explicit {
        resolved.insert((i, j), statement.terms.clone());
    }
    for (&(i, j), statement) in &explicit {
        if statement.mirrored && i != j && !explicit.contains_key(&(j, i)) {
            resolved.insert((j, i), statement.terms.clone());
        }
    }

    let mut tensor = StructureTensor::new(n, f);
    for ((i, j), terms) in resolved {
        let mut accumulated: std::collections::BTreeMap<usize, Scalar> =
            std::collections::BTreeMap::new();
        for (k, coeff) in terms {
            let slot = accumulated.entry(k).or_insert_with(|| Scalar::zero(f));
            *slot = &*slot + &coeff;
        }
        for (k, coeff) in accumulated {
            tensor
                .set(i, j, k, coeff)
                .expect("indices validated during parsing");
        }
    }
    Ok(tensor)
}

fn render_magnitude(out: &mut String, coeff: &Scalar, k: usize) {
    if !coeff.is_one() {
        out.push_str(&coeff.to_string());
        out.push(' ');
    }
    out.push('e');
    out.push_str(&k.to_string());
}

fn render_terms(out: &mut String, terms: &[(usize, Scalar)]) {
    for (pos, (k, coeff)) in terms.iter().enumerate() {
        let negative = coeff.is_negative();
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = if negative {
            coeff.negated()
        } else {
            coeff.clone()
        };
        render_magnitude(out, &magnitude, *k);
    }
}

/// Serializes a tensor as a canonical document: header comment, field,
/// dimension, then the nonzero products in index order. Symmetric tensors
/// rely on the default mirroring and list only pairs with `i <= j`; other
/// tensors switch mirroring off and list every pair. The output is
/// byte-deterministic and parses back to the same tensor.
pub fn serialize(tensor: &StructureTensor) -> String {
    let n = tensor.dim();
    let symmetric = tensor.is_symmetric();
    let mut out = String::from("# algebra document, format 1\n");
    out.push_str(&format!("field {}\n", tensor.field()));
    out.push_str(&format!("dim {n}\n"));
    if !symmetric {
        out.push_str("symmetric off\n");
    }
    for i in 1..=n {
        let start = if symmetric { i } else { 1 };
        for j in start..=n {
            let terms: Vec<(usize, Scalar)> = (1..=n)
                .filter_map(|k| {
                    let c = tensor.coeff(i, j, k);
                    (!c.is_zero()).then_some((k, c))
                })
                .collect();
            if terms.is_empty() {
                continue;
            }
            out.push_str(&format!("e{i} * e{j} = "));
            render_terms(&mut out, &terms);
            out.push('\n');
        }
    }
    out
}
