//! Tokenizer for the supported Java subset.

use super::{ParseError, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Identifier,
    Keyword,
    Number,
    StringLit,
    CharLit,
    /// The `<str>` placeholder produced by corpus preprocessing.
    StrToken,
    Operator,
    Punct,
}

#[derive(Debug, Clone)]
pub struct LexedToken {
    pub kind: TokenKind,
    pub text: String,
    pub span: Span,
}

pub(crate) const KEYWORDS: &[&str] = &[
    "if", "else", "while", "for", "do", "switch", "case", "try", "catch", "finally", "return",
    "break", "continue", "throw", "throws", "this", "instanceof", "true", "false", "null",
    "public", "private", "protected", "static", "final", "abstract", "native", "transient",
    "volatile", "synchronized", "strictfp", "default", "int", "long", "short", "byte", "char",
    "boolean", "float", "double", "void", "new", "class", "interface", "enum", "extends",
    "implements", "import", "package", "goto", "assert", "super", "var", "record", "yield",
];

const MULTI_OPS: &[&str] = &[
    ">>>=", ">>>", "<<=", ">>=", "===", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->", "::",
];

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

/// Lexes `source` into tokens, skipping whitespace and comments.
pub fn lex(source: &str) -> Result<Vec<LexedToken>, ParseError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        // comments
        if c == '/' && i + 1 < chars.len() {
            if chars[i + 1] == '/' {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            if chars[i + 1] == '*' {
                let start = i;
                i += 2;
                loop {
                    if i + 1 >= chars.len() {
                        return Err(ParseError::Syntax {
                            span: (start, chars.len()),
                            message: "unterminated block comment".into(),
                        });
                    }
                    if chars[i] == '*' && chars[i + 1] == '/' {
                        i += 2;
                        break;
                    }
                    i += 1;
                }
                continue;
            }
        }
        // <str> placeholder
        if c == '<' && chars[i..].starts_with(&['<', 's', 't', 'r', '>']) {
            tokens.push(LexedToken {
                kind: TokenKind::StrToken,
                text: "<str>".into(),
                span: (i, i + 5),
            });
            i += 5;
            continue;
        }
        if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_part(chars[i]) {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let kind = if KEYWORDS.contains(&text.as_str()) {
                TokenKind::Keyword
            } else {
                TokenKind::Identifier
            };
            tokens.push(LexedToken {
                kind,
                text,
                span: (start, i),
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_'
                    || (chars[i] == '.' && chars.get(i + 1).map_or(false, |c| c.is_ascii_digit())))
            {
                i += 1;
            }
            tokens.push(LexedToken {
                kind: TokenKind::Number,
                text: chars[start..i].iter().collect(),
                span: (start, i),
            });
            continue;
        }
        if c == '"' || c == '\'' {
            let quote = c;
            let start = i;
            i += 1;
            loop {
                if i >= chars.len() {
                    return Err(ParseError::Syntax {
                        span: (start, chars.len()),
                        message: "unterminated literal".into(),
                    });
                }
                if chars[i] == '\\' {
                    i += 2;
                    continue;
                }
                if chars[i] == quote {
                    i += 1;
                    break;
                }
                i += 1;
            }
            tokens.push(LexedToken {
                kind: if quote == '"' {
                    TokenKind::StringLit
                } else {
                    TokenKind::CharLit
                },
                text: chars[start..i].iter().collect(),
                span: (start, i),
            });
            continue;
        }
        // multi-char operators, longest first
        let rest: String = chars[i..chars.len().min(i + 4)].iter().collect();
        if let Some(op) = MULTI_OPS.iter().find(|op| rest.starts_with(**op)) {
            tokens.push(LexedToken {
                kind: TokenKind::Operator,
                text: (*op).into(),
                span: (i, i + op.len()),
            });
            i += op.len();
            continue;
        }
        let kind = match c {
            '+' | '-' | '*' | '/' | '%' | '<' | '>' | '=' | '!' | '&' | '|' | '^' | '~' => {
                TokenKind::Operator
            }
            '(' | ')' | '{' | '}' | '[' | ']' | ';' | ',' | '.' | ':' | '?' | '@' => {
                TokenKind::Punct
            }
            _ => {
                return Err(ParseError::Syntax {
                    span: (i, i + 1),
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        tokens.push(LexedToken {
            kind,
            text: c.to_string(),
            span: (i, i + 1),
        });
        i += 1;
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_basic_method() {
        let toks = lex("int max(int a){return a;}").unwrap();
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(
            texts,
            vec!["int", "max", "(", "int", "a", ")", "{", "return", "a", ";", "}"]
        );
    }

    #[test]
    fn lexes_str_placeholder_and_operators() {
        let toks = lex("log(<str> + name) <= x++").unwrap();
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(
            texts,
            vec!["log", "(", "<str>", "+", "name", ")", "<=", "x", "++"]
        );
        assert_eq!(toks[2].kind, TokenKind::StrToken);
    }

    #[test]
    fn skips_comments() {
        let toks = lex("a /* \"quoted\" */ b // c\n d").unwrap();
        let texts: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, vec!["a", "b", "d"]);
    }

    #[test]
    fn string_with_escape_is_one_token() {
        let toks = lex(r#"x = "a\"b";"#).unwrap();
        assert_eq!(toks[2].kind, TokenKind::StringLit);
        assert_eq!(toks[2].text, r#""a\"b""#);
    }
}
