//! Cheap package/type prescan used for scope filtering, so excluded
//! files are never fully parsed.

/// Extracts the dotted package name and the first top-level type name
/// from raw source text. Comment- and string-aware, but otherwise does
/// no parsing: good enough to build the scoping subject.
pub fn prescan(text: &str) -> (Option<String>, Option<String>) {
    let mut package = None;
    let mut primary_type = None;
    let mut depth = 0i32;
    let mut tokens = Lexer::new(text);
    while let Some(tok) = tokens.next_token() {
        match tok {
            Token::Open => depth += 1,
            Token::Close => depth -= 1,
            Token::Word(w) if depth == 0 => match w {
                "package" if package.is_none() => {
                    package = tokens.dotted_name();
                }
                "class" | "interface" | "enum" | "record" if primary_type.is_none() => {
                    if let Some(Token::Word(name)) = tokens.next_token() {
                        primary_type = Some(name.to_string());
                        break;
                    }
                }
                _ => {}
            },
            _ => {}
        }
    }
    (package, primary_type)
}

enum Token<'a> {
    Word(&'a str),
    Open,
    Close,
    Punct,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    fn next_token(&mut self) -> Option<Token<'a>> {
        let bytes = self.text.as_bytes();
        loop {
            let b = *bytes.get(self.pos)?;
            match b {
                b'/' if bytes.get(self.pos + 1) == Some(&b'/') => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b'/' if bytes.get(self.pos + 1) == Some(&b'*') => {
                    self.pos += 2;
                    while self.pos < bytes.len() {
                        if bytes[self.pos] == b'*' && bytes.get(self.pos + 1) == Some(&b'/') {
                            self.pos += 2;
                            break;
                        }
                        self.pos += 1;
                    }
                }
                b'"' | b'\'' => {
                    let quote = b;
                    self.pos += 1;
                    while self.pos < bytes.len() {
                        match bytes[self.pos] {
                            b'\\' => self.pos += 2,
                            c if c == quote => {
                                self.pos += 1;
                                break;
                            }
                            b'\n' if quote == b'\'' => break,
                            _ => self.pos += 1,
                        }
                    }
                }
                b'{' => {
                    self.pos += 1;
                    return Some(Token::Open);
                }
                b'}' => {
                    self.pos += 1;
                    return Some(Token::Close);
                }
                c if c.is_ascii_alphabetic() || c == b'_' || c == b'$' || c >= 0x80 => {
                    let start = self.pos;
                    while self.pos < bytes.len() {
                        let c = bytes[self.pos];
                        if c.is_ascii_alphanumeric() || c == b'_' || c == b'$' || c >= 0x80 {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    return Some(Token::Word(&self.text[start..self.pos]));
                }
                _ => {
                    self.pos += 1;
                    if !b.is_ascii_whitespace() && !b.is_ascii_digit() {
                        return Some(Token::Punct);
                    }
                }
            }
        }
    }

    /// Reads a dotted identifier sequence like `in.software.analytics`.
    fn dotted_name(&mut self) -> Option<String> {
        let mut name = match self.next_token()? {
            Token::Word(w) => w.to_string(),
            _ => return None,
        };
        let bytes = self.text.as_bytes();
        while bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            match self.next_token() {
                Some(Token::Word(w)) => {
                    name.push('.');
                    name.push_str(w);
                }
                _ => break,
            }
        }
        Some(name)
    }
}
