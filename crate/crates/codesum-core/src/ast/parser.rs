//! Recursive-descent parser for the supported Java method subset.
//!
//! The grammar covers one method declaration: a header, a braced body, the
//! eight simple-statement forms, the seven compound-statement forms and a
//! conventional expression precedence ladder. Constructs outside the subset
//! (object creation, lambdas, generics, enhanced `for`, ...) are rejected
//! with [`ParseError::UnsupportedConstruct`] so corpus loaders can skip and
//! count them.
//!
//! Every lexical token of the source becomes a leaf node, so linearizing the
//! tree reproduces the token stream exactly.

use super::lexer::{lex, LexedToken, TokenKind};
use super::{Ast, AstNode, NodeId, NodeType, ParseError, Span};

const PRIMITIVE_TYPES: &[&str] = &[
    "int", "long", "short", "byte", "char", "boolean", "float", "double", "void",
];

const MODIFIERS: &[&str] = &[
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "native",
    "transient",
    "volatile",
    "synchronized",
    "strictfp",
];

const UNSUPPORTED_KEYWORDS: &[(&str, &str)] = &[
    ("new", "object_creation"),
    ("goto", "goto"),
    ("assert", "assert_statement"),
    ("super", "super_reference"),
    ("class", "local_class"),
    ("interface", "local_interface"),
    ("enum", "local_enum"),
    ("import", "import_declaration"),
    ("package", "package_declaration"),
    ("default", "default_case"),
    ("var", "var_declaration"),
    ("record", "local_record"),
    ("yield", "yield_statement"),
    ("extends", "extends_clause"),
    ("implements", "implements_clause"),
];

/// Parses a single Java method declaration into a typed tree.
pub fn parse_method(source: &str) -> Result<Ast, ParseError> {
    let tokens = lex(source)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        nodes: Vec::new(),
    };
    let root = parser.method_declaration()?;
    if parser.pos != parser.tokens.len() {
        let t = &parser.tokens[parser.pos];
        return Err(ParseError::Syntax {
            span: t.span,
            message: format!("trailing input starting at `{}`", t.text),
        });
    }
    Ok(Ast {
        nodes: parser.nodes,
        root,
    })
}

struct Parser {
    tokens: Vec<LexedToken>,
    pos: usize,
    nodes: Vec<AstNode>,
}

impl Parser {
    fn peek(&self) -> Option<&LexedToken> {
        self.tokens.get(self.pos)
    }

    fn peek_at(&self, offset: usize) -> Option<&LexedToken> {
        self.tokens.get(self.pos + offset)
    }

    fn peek_is(&self, text: &str) -> bool {
        self.peek().map_or(false, |t| t.text == text)
    }

    fn peek_at_is(&self, offset: usize, text: &str) -> bool {
        self.peek_at(offset).map_or(false, |t| t.text == text)
    }

    fn here(&self) -> Span {
        self.peek()
            .map(|t| t.span)
            .unwrap_or_else(|| (self.end_offset(), self.end_offset()))
    }

    fn end_offset(&self) -> usize {
        self.tokens.last().map(|t| t.span.1).unwrap_or(0)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            span: self.here(),
            message: message.into(),
        }
    }

    fn unsupported(&self, construct: &str) -> ParseError {
        ParseError::UnsupportedConstruct {
            span: self.here(),
            construct: construct.into(),
        }
    }

    fn check_unsupported_keyword(&self) -> Result<(), ParseError> {
        if let Some(t) = self.peek() {
            if t.kind == TokenKind::Keyword {
                if let Some((_, name)) = UNSUPPORTED_KEYWORDS.iter().find(|(k, _)| *k == t.text) {
                    return Err(self.unsupported(name));
                }
            }
            if t.text == "->" {
                return Err(self.unsupported("lambda"));
            }
            if t.text == "::" {
                return Err(self.unsupported("method_reference"));
            }
            if t.text == "@" {
                return Err(self.unsupported("annotation"));
            }
        }
        Ok(())
    }

    fn advance(&mut self) -> Result<LexedToken, ParseError> {
        let t = self
            .peek()
            .cloned()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn push(&mut self, node_type: NodeType, token: Option<String>, children: Vec<NodeId>, span: Span) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(AstNode {
            id,
            node_type,
            token,
            children,
            span,
        });
        id
    }

    /// Consumes the next token as a leaf node of the given type.
    fn leaf(&mut self, node_type: NodeType) -> Result<NodeId, ParseError> {
        let t = self.advance()?;
        Ok(self.push(node_type, Some(t.text), vec![], t.span))
    }

    fn expect_leaf(&mut self, text: &str, node_type: NodeType) -> Result<NodeId, ParseError> {
        match self.peek() {
            Some(t) if t.text == text => self.leaf(node_type),
            Some(t) => Err(ParseError::Syntax {
                span: t.span,
                message: format!("expected `{text}`, found `{}`", t.text),
            }),
            None => Err(self.error(format!("expected `{text}`, found end of input"))),
        }
    }

    fn span_of(&self, children: &[NodeId]) -> Span {
        let start = children.first().map(|&c| self.nodes[c].span.0).unwrap_or(0);
        let end = children.last().map(|&c| self.nodes[c].span.1).unwrap_or(0);
        (start, end)
    }

    fn finish(&mut self, node_type: NodeType, children: Vec<NodeId>) -> NodeId {
        let span = self.span_of(&children);
        self.push(node_type, None, children, span)
    }

    // ---- header -------------------------------------------------------

    fn method_declaration(&mut self) -> Result<NodeId, ParseError> {
        let header = self.method_header()?;
        let mut children = vec![header];
        children.push(self.expect_leaf("{", NodeType::Punct)?);
        while !self.peek_is("}") {
            if self.peek().is_none() {
                return Err(self.error("expected `}` to close method body"));
            }
            children.push(self.statement()?);
        }
        children.push(self.expect_leaf("}", NodeType::Punct)?);
        Ok(self.finish(NodeType::MethodDeclaration, children))
    }

    fn method_header(&mut self) -> Result<NodeId, ParseError> {
        let mut children = Vec::new();
        while self
            .peek()
            .map_or(false, |t| MODIFIERS.contains(&t.text.as_str()))
        {
            children.push(self.leaf(NodeType::Modifier)?);
        }
        self.check_unsupported_keyword()?;
        // constructor form: `Name (` without a return type
        let constructor = self.peek().map_or(false, |t| t.kind == TokenKind::Identifier)
            && self.peek_at_is(1, "(");
        if !constructor {
            self.type_tokens(&mut children)?;
        }
        if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
            return Err(self.error("expected method name"));
        }
        children.push(self.leaf(NodeType::Identifier)?);
        children.push(self.parameter_list()?);
        if self.peek_is("throws") {
            children.push(self.leaf(NodeType::Keyword)?);
            loop {
                if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
                    return Err(self.error("expected exception name after `throws`"));
                }
                children.push(self.leaf(NodeType::Identifier)?);
                if self.peek_is(",") {
                    children.push(self.leaf(NodeType::Punct)?);
                } else {
                    break;
                }
            }
        }
        Ok(self.finish(NodeType::MethodHeader, children))
    }

    /// type = (primitive | Identifier) ('[' ']')*
    fn type_tokens(&mut self, children: &mut Vec<NodeId>) -> Result<(), ParseError> {
        self.check_unsupported_keyword()?;
        match self.peek() {
            Some(t) if PRIMITIVE_TYPES.contains(&t.text.as_str()) => {
                children.push(self.leaf(NodeType::TypeIdentifier)?);
            }
            Some(t) if t.kind == TokenKind::Identifier => {
                children.push(self.leaf(NodeType::TypeIdentifier)?);
            }
            _ => return Err(self.error("expected type")),
        }
        if self.peek_is("<") {
            return Err(self.unsupported("generic_type"));
        }
        while self.peek_is("[") && self.peek_at_is(1, "]") {
            children.push(self.leaf(NodeType::Punct)?);
            children.push(self.leaf(NodeType::Punct)?);
        }
        Ok(())
    }

    fn parameter_list(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.expect_leaf("(", NodeType::Punct)?];
        if !self.peek_is(")") {
            loop {
                children.push(self.formal_parameter()?);
                if self.peek_is(",") {
                    children.push(self.leaf(NodeType::Punct)?);
                } else {
                    break;
                }
            }
        }
        children.push(self.expect_leaf(")", NodeType::Punct)?);
        Ok(self.finish(NodeType::ParameterList, children))
    }

    fn formal_parameter(&mut self) -> Result<NodeId, ParseError> {
        let mut children = Vec::new();
        while self.peek_is("final") {
            children.push(self.leaf(NodeType::Modifier)?);
        }
        self.type_tokens(&mut children)?;
        if self.peek_is(".") {
            return Err(self.unsupported("varargs"));
        }
        if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
            return Err(self.error("expected parameter name"));
        }
        children.push(self.leaf(NodeType::Identifier)?);
        Ok(self.finish(NodeType::FormalParameter, children))
    }

    // ---- statements ----------------------------------------------------

    fn statement(&mut self) -> Result<NodeId, ParseError> {
        self.check_unsupported_keyword()?;
        let t = self.peek().ok_or_else(|| self.error("expected statement"))?;
        match t.text.as_str() {
            "if" => self.if_statement(),
            "while" => self.while_statement(),
            "for" => self.for_statement(),
            "do" => self.dowhile_statement(),
            "switch" => self.switch_statement(),
            "try" => self.try_statement(),
            "return" => self.return_statement(),
            "break" => self.break_or_continue(NodeType::BreakStatement),
            "continue" => self.break_or_continue(NodeType::ContinueStatement),
            "throw" => self.throw_statement(),
            _ => self.simple_statement(),
        }
    }

    /// Declaration, assignment, call or a bare expression statement.
    fn simple_statement(&mut self) -> Result<NodeId, ParseError> {
        if self.looks_like_declaration() {
            let mut children = Vec::new();
            self.declaration_core(&mut children)?;
            if self.peek_is(":") {
                return Err(self.unsupported("enhanced_for"));
            }
            children.push(self.expect_leaf(";", NodeType::Punct)?);
            return Ok(self.finish(NodeType::VariableDeclaration, children));
        }
        let expr = self.expression()?;
        let semi = self.expect_leaf(";", NodeType::Punct)?;
        let node_type = self.nodes[expr].node_type;
        match node_type {
            NodeType::AssignmentExpression => {
                // re-tag statement-position assignments
                let mut children = std::mem::take(&mut self.nodes[expr].children);
                children.push(semi);
                let span = (self.nodes[expr].span.0, self.nodes[semi].span.1);
                self.nodes[expr].children = children;
                self.nodes[expr].node_type = NodeType::AssignmentStatement;
                self.nodes[expr].span = span;
                Ok(expr)
            }
            NodeType::MethodInvocation => {
                self.nodes[expr].children.push(semi);
                self.nodes[expr].span.1 = self.nodes[semi].span.1;
                Ok(expr)
            }
            _ => Ok(self.finish(NodeType::ExpressionStatement, vec![expr, semi])),
        }
    }

    /// `Type name` lookahead: primitive, `Ident Ident`, or `Ident [ ] ...`.
    fn looks_like_declaration(&self) -> bool {
        let Some(t0) = self.peek() else { return false };
        if PRIMITIVE_TYPES.contains(&t0.text.as_str()) || t0.text == "final" {
            return true;
        }
        if t0.kind != TokenKind::Identifier {
            return false;
        }
        let mut i = 1;
        while self.peek_at_is(i, "[") && self.peek_at_is(i + 1, "]") {
            i += 2;
        }
        self.peek_at(i)
            .map_or(false, |t| t.kind == TokenKind::Identifier)
    }

    /// `Type name ('=' expression)?` without the terminator.
    fn declaration_core(&mut self, children: &mut Vec<NodeId>) -> Result<(), ParseError> {
        while self.peek_is("final") {
            children.push(self.leaf(NodeType::Modifier)?);
        }
        self.type_tokens(children)?;
        if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
            return Err(self.error("expected variable name"));
        }
        children.push(self.leaf(NodeType::Identifier)?);
        while self.peek_is("[") && self.peek_at_is(1, "]") {
            children.push(self.leaf(NodeType::Punct)?);
            children.push(self.leaf(NodeType::Punct)?);
        }
        if self.peek_is("=") {
            children.push(self.leaf(NodeType::Operator)?);
            children.push(self.expression()?);
        } else if self.peek_is(",") {
            return Err(self.unsupported("multi_declarator"));
        }
        Ok(())
    }

    fn return_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        if !self.peek_is(";") {
            children.push(self.expression()?);
        }
        children.push(self.expect_leaf(";", NodeType::Punct)?);
        Ok(self.finish(NodeType::ReturnStatement, children))
    }

    fn break_or_continue(&mut self, node_type: NodeType) -> Result<NodeId, ParseError> {
        let kw = self.leaf(NodeType::Keyword)?;
        let semi = self.expect_leaf(";", NodeType::Punct)?;
        Ok(self.finish(node_type, vec![kw, semi]))
    }

    fn throw_statement(&mut self) -> Result<NodeId, ParseError> {
        let kw = self.leaf(NodeType::Keyword)?;
        let expr = self.expression()?;
        let semi = self.expect_leaf(";", NodeType::Punct)?;
        Ok(self.finish(NodeType::ThrowStatement, vec![kw, expr, semi]))
    }

    /// `'{' statement* '}'` appended to `children` (no block node; braces and
    /// statements become direct children of the enclosing compound node).
    fn braced_statements(&mut self, children: &mut Vec<NodeId>) -> Result<(), ParseError> {
        children.push(self.expect_leaf("{", NodeType::Punct)?);
        while !self.peek_is("}") {
            if self.peek().is_none() {
                return Err(self.error("expected `}`"));
            }
            children.push(self.statement()?);
        }
        children.push(self.expect_leaf("}", NodeType::Punct)?);
        Ok(())
    }

    fn parenthesized_expression(&mut self, children: &mut Vec<NodeId>) -> Result<(), ParseError> {
        children.push(self.expect_leaf("(", NodeType::Punct)?);
        children.push(self.expression()?);
        children.push(self.expect_leaf(")", NodeType::Punct)?);
        Ok(())
    }

    fn if_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        self.parenthesized_expression(&mut children)?;
        self.braced_statements(&mut children)?;
        while self.peek_is("else") {
            children.push(self.leaf(NodeType::Keyword)?);
            if self.peek_is("if") {
                children.push(self.leaf(NodeType::Keyword)?);
                self.parenthesized_expression(&mut children)?;
                self.braced_statements(&mut children)?;
            } else {
                self.braced_statements(&mut children)?;
                break;
            }
        }
        Ok(self.finish(NodeType::IfStatement, children))
    }

    fn while_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        self.parenthesized_expression(&mut children)?;
        self.braced_statements(&mut children)?;
        Ok(self.finish(NodeType::WhileStatement, children))
    }

    fn for_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        children.push(self.expect_leaf("(", NodeType::Punct)?);
        if !self.peek_is(";") {
            if !self.looks_like_declaration() {
                return Err(self.unsupported("for_init_expression"));
            }
            let mut decl = Vec::new();
            self.declaration_core(&mut decl)?;
            if self.peek_is(":") {
                return Err(self.unsupported("enhanced_for"));
            }
            children.push(self.finish(NodeType::VariableDeclaration, decl));
        }
        children.push(self.expect_leaf(";", NodeType::Punct)?);
        if !self.peek_is(";") {
            children.push(self.expression()?);
        }
        children.push(self.expect_leaf(";", NodeType::Punct)?);
        if !self.peek_is(")") {
            children.push(self.expression()?);
        }
        children.push(self.expect_leaf(")", NodeType::Punct)?);
        self.braced_statements(&mut children)?;
        Ok(self.finish(NodeType::ForStatement, children))
    }

    fn dowhile_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        self.braced_statements(&mut children)?;
        children.push(self.expect_leaf("while", NodeType::Keyword)?);
        self.parenthesized_expression(&mut children)?;
        if self.peek_is(";") {
            children.push(self.leaf(NodeType::Punct)?);
        }
        Ok(self.finish(NodeType::DowhileStatement, children))
    }

    fn switch_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        self.parenthesized_expression(&mut children)?;
        children.push(self.expect_leaf("{", NodeType::Punct)?);
        while self.peek_is("case") {
            children.push(self.leaf(NodeType::Keyword)?);
            children.push(self.expression()?);
            children.push(self.expect_leaf(":", NodeType::Punct)?);
            self.braced_statements(&mut children)?;
        }
        if self.peek_is("default") {
            return Err(self.unsupported("default_case"));
        }
        children.push(self.expect_leaf("}", NodeType::Punct)?);
        Ok(self.finish(NodeType::SwitchcaseStatement, children))
    }

    fn try_statement(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        let with_resources = self.peek_is("(");
        if with_resources {
            children.push(self.leaf(NodeType::Punct)?);
            children.push(self.resource_specification()?);
            children.push(self.expect_leaf(")", NodeType::Punct)?);
        }
        self.braced_statements(&mut children)?;
        while self.peek_is("catch") {
            children.push(self.catch_clause()?);
        }
        if self.peek_is("finally") {
            let mut fin = vec![self.leaf(NodeType::Keyword)?];
            self.braced_statements(&mut fin)?;
            children.push(self.finish(NodeType::FinallyClause, fin));
        }
        let node_type = if with_resources {
            NodeType::TryWithResourcesStatement
        } else {
            NodeType::TryStatement
        };
        Ok(self.finish(node_type, children))
    }

    fn resource_specification(&mut self) -> Result<NodeId, ParseError> {
        let mut children = Vec::new();
        self.type_tokens(&mut children)?;
        if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
            return Err(self.error("expected resource name"));
        }
        children.push(self.leaf(NodeType::Identifier)?);
        children.push(self.expect_leaf("=", NodeType::Operator)?);
        children.push(self.expression()?);
        Ok(self.finish(NodeType::ResourceSpecification, children))
    }

    fn catch_clause(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.leaf(NodeType::Keyword)?];
        children.push(self.expect_leaf("(", NodeType::Punct)?);
        if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
            return Err(self.error("expected exception type"));
        }
        children.push(self.leaf(NodeType::TypeIdentifier)?);
        if self.peek_is("|") {
            return Err(self.unsupported("multi_catch"));
        }
        if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
            return Err(self.error("expected exception variable"));
        }
        children.push(self.leaf(NodeType::Identifier)?);
        children.push(self.expect_leaf(")", NodeType::Punct)?);
        self.braced_statements(&mut children)?;
        Ok(self.finish(NodeType::CatchClause, children))
    }

    // ---- expressions ----------------------------------------------------

    fn expression(&mut self) -> Result<NodeId, ParseError> {
        self.assignment_expression()
    }

    fn assignment_expression(&mut self) -> Result<NodeId, ParseError> {
        let lhs = self.ternary_expression()?;
        let is_assign_op = self.peek().map_or(false, |t| {
            matches!(
                t.text.as_str(),
                "=" | "+=" | "-=" | "*=" | "/=" | "%=" | "&=" | "|=" | "^=" | "<<=" | ">>=" | ">>>="
            )
        });
        if is_assign_op {
            let op = self.leaf(NodeType::Operator)?;
            let rhs = self.assignment_expression()?;
            return Ok(self.finish(NodeType::AssignmentExpression, vec![lhs, op, rhs]));
        }
        Ok(lhs)
    }

    fn ternary_expression(&mut self) -> Result<NodeId, ParseError> {
        let cond = self.binary_expression(0)?;
        if self.peek_is("?") {
            let q = self.leaf(NodeType::Punct)?;
            let then = self.expression()?;
            let colon = self.expect_leaf(":", NodeType::Punct)?;
            let alt = self.expression()?;
            return Ok(self.finish(NodeType::TernaryExpression, vec![cond, q, then, colon, alt]));
        }
        Ok(cond)
    }

    fn binary_level(op: &str) -> Option<u8> {
        Some(match op {
            "||" => 0,
            "&&" => 1,
            "|" => 2,
            "^" => 3,
            "&" => 4,
            "==" | "!=" => 5,
            "<" | ">" | "<=" | ">=" | "instanceof" => 6,
            "<<" | ">>" | ">>>" => 7,
            "+" | "-" => 8,
            "*" | "/" | "%" => 9,
            _ => return None,
        })
    }

    fn binary_expression(&mut self, min_level: u8) -> Result<NodeId, ParseError> {
        let mut lhs = self.unary_expression()?;
        loop {
            let Some(t) = self.peek() else { break };
            let Some(level) = Self::binary_level(&t.text) else { break };
            if level < min_level {
                break;
            }
            if t.text == "instanceof" {
                let kw = self.leaf(NodeType::Keyword)?;
                let mut children = vec![lhs, kw];
                self.type_tokens(&mut children)?;
                lhs = self.finish(NodeType::InstanceofExpression, children);
                continue;
            }
            let op = self.leaf(NodeType::Operator)?;
            let rhs = self.binary_expression(level + 1)?;
            lhs = self.finish(NodeType::BinaryExpression, vec![lhs, op, rhs]);
        }
        Ok(lhs)
    }

    fn unary_expression(&mut self) -> Result<NodeId, ParseError> {
        self.check_unsupported_keyword()?;
        let Some(t) = self.peek() else {
            return Err(self.error("expected expression"));
        };
        match t.text.as_str() {
            "++" | "--" => {
                let op = self.leaf(NodeType::Operator)?;
                let operand = self.unary_expression()?;
                Ok(self.finish(NodeType::UpdateExpression, vec![op, operand]))
            }
            "!" | "~" | "+" | "-" => {
                let op = self.leaf(NodeType::Operator)?;
                let operand = self.unary_expression()?;
                Ok(self.finish(NodeType::UnaryExpression, vec![op, operand]))
            }
            _ => self.postfix_expression(),
        }
    }

    fn postfix_expression(&mut self) -> Result<NodeId, ParseError> {
        let mut expr = self.primary_expression()?;
        loop {
            let Some(t) = self.peek() else { break };
            match t.text.as_str() {
                "." => {
                    let dot = self.leaf(NodeType::Punct)?;
                    self.check_unsupported_keyword()?;
                    if self.peek().map_or(true, |t| t.kind != TokenKind::Identifier) {
                        return Err(self.error("expected field or method name after `.`"));
                    }
                    let name = self.leaf(NodeType::Identifier)?;
                    expr = self.finish(NodeType::FieldAccess, vec![expr, dot, name]);
                }
                "(" => {
                    let args = self.argument_list()?;
                    expr = self.finish(NodeType::MethodInvocation, vec![expr, args]);
                }
                "[" => {
                    let open = self.leaf(NodeType::Punct)?;
                    let index = self.expression()?;
                    let close = self.expect_leaf("]", NodeType::Punct)?;
                    expr = self.finish(NodeType::ArrayAccess, vec![expr, open, index, close]);
                }
                "++" | "--" => {
                    let op = self.leaf(NodeType::Operator)?;
                    expr = self.finish(NodeType::UpdateExpression, vec![expr, op]);
                }
                "::" => return Err(self.unsupported("method_reference")),
                _ => break,
            }
        }
        Ok(expr)
    }

    fn argument_list(&mut self) -> Result<NodeId, ParseError> {
        let mut children = vec![self.expect_leaf("(", NodeType::Punct)?];
        if !self.peek_is(")") {
            loop {
                children.push(self.expression()?);
                if self.peek_is(",") {
                    children.push(self.leaf(NodeType::Punct)?);
                } else {
                    break;
                }
            }
        }
        children.push(self.expect_leaf(")", NodeType::Punct)?);
        Ok(self.finish(NodeType::ArgumentList, children))
    }

    /// True when `( ... )` at the current position is a cast rather than a
    /// parenthesized expression.
    fn looks_like_cast(&self) -> bool {
        if !self.peek_is("(") {
            return false;
        }
        let Some(t1) = self.peek_at(1) else { return false };
        let mut i = 2;
        if PRIMITIVE_TYPES.contains(&t1.text.as_str()) {
            // ( int ) or ( int [ ] )
        } else if t1.kind == TokenKind::Identifier {
            // ambiguous; only treat as cast when followed by an operand
        } else {
            return false;
        }
        while self.peek_at_is(i, "[") && self.peek_at_is(i + 1, "]") {
            i += 2;
        }
        if !self.peek_at_is(i, ")") {
            return false;
        }
        let Some(next) = self.peek_at(i + 1) else { return false };
        if PRIMITIVE_TYPES.contains(&t1.text.as_str()) {
            return true;
        }
        matches!(
            next.kind,
            TokenKind::Identifier | TokenKind::Number | TokenKind::StringLit | TokenKind::CharLit
                | TokenKind::StrToken
        ) || next.text == "(" || next.text == "this"
    }

    fn primary_expression(&mut self) -> Result<NodeId, ParseError> {
        self.check_unsupported_keyword()?;
        let Some(t) = self.peek().cloned() else {
            return Err(self.error("expected expression"));
        };
        match t.kind {
            TokenKind::Number | TokenKind::StringLit | TokenKind::CharLit | TokenKind::StrToken => {
                self.leaf(NodeType::Literal)
            }
            TokenKind::Keyword if matches!(t.text.as_str(), "true" | "false" | "null") => {
                self.leaf(NodeType::Literal)
            }
            TokenKind::Keyword if t.text == "this" => self.leaf(NodeType::This),
            TokenKind::Identifier => self.leaf(NodeType::Identifier),
            _ if t.text == "(" => {
                if self.looks_like_cast() {
                    let mut children = vec![self.leaf(NodeType::Punct)?];
                    self.type_tokens(&mut children)?;
                    children.push(self.expect_leaf(")", NodeType::Punct)?);
                    children.push(self.unary_expression()?);
                    return Ok(self.finish(NodeType::CastExpression, children));
                }
                // parenthesized expression: parens fold into the inner node
                let open = self.leaf(NodeType::Punct)?;
                let inner = self.expression()?;
                let close = self.expect_leaf(")", NodeType::Punct)?;
                let mut children = vec![open];
                children.push(inner);
                children.push(close);
                let span = (self.nodes[open].span.0, self.nodes[close].span.1);
                let node_type = self.nodes[inner].node_type;
                let id = self.push(node_type, None, children, span);
                // leaves keep their token invariant: wrap a leaf in its own type
                // with the parens as siblings, clearing nothing
                if self.nodes[inner].has_token() {
                    // keep the leaf as-is under the wrapper
                }
                Ok(id)
            }
            _ => Err(self.error(format!("unexpected token `{}`", t.text))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> Ast {
        parse_method(src).unwrap()
    }

    fn count_type(ast: &Ast, nt: NodeType) -> usize {
        ast.nodes.iter().filter(|n| n.node_type == nt).count()
    }

    #[test]
    fn minimal_method() {
        let ast = parse("int f(){return 0;}");
        assert_eq!(ast.node(ast.root).node_type, NodeType::MethodDeclaration);
        let body_stmts: Vec<NodeType> = ast
            .node(ast.root)
            .children
            .iter()
            .map(|&c| ast.node(c).node_type)
            .collect();
        assert_eq!(
            body_stmts,
            vec![
                NodeType::MethodHeader,
                NodeType::Punct,
                NodeType::ReturnStatement,
                NodeType::Punct
            ]
        );
    }

    #[test]
    fn max_method_shape() {
        let ast = parse("int max(int a,int b){int max=a; if(a<b){max=b;} return max;}");
        assert_eq!(count_type(&ast, NodeType::IfStatement), 1);
        assert_eq!(count_type(&ast, NodeType::BinaryExpression), 1);
        assert_eq!(count_type(&ast, NodeType::AssignmentStatement), 1);
        let if_node = ast
            .nodes
            .iter()
            .find(|n| n.node_type == NodeType::IfStatement)
            .unwrap();
        let kinds: Vec<NodeType> = if_node
            .children
            .iter()
            .map(|&c| ast.node(c).node_type)
            .collect();
        assert_eq!(
            kinds,
            vec![
                NodeType::Keyword,
                NodeType::Punct,
                NodeType::BinaryExpression,
                NodeType::Punct,
                NodeType::Punct,
                NodeType::AssignmentStatement,
                NodeType::Punct
            ]
        );
    }

    #[test]
    fn goto_is_unsupported() {
        match parse_method("int f(){ goto L; }") {
            Err(ParseError::UnsupportedConstruct { construct, .. }) => {
                assert_eq!(construct, "goto")
            }
            other => panic!("expected unsupported construct, got {other:?}"),
        }
    }

    #[test]
    fn object_creation_is_unsupported() {
        match parse_method("int f(){ Foo x = new Foo(); }") {
            Err(ParseError::UnsupportedConstruct { construct, .. }) => {
                assert_eq!(construct, "object_creation")
            }
            other => panic!("expected unsupported construct, got {other:?}"),
        }
    }

    #[test]
    fn generics_are_unsupported() {
        assert!(matches!(
            parse_method("void f(List<String> xs){}"),
            Err(ParseError::UnsupportedConstruct { .. })
        ));
    }

    #[test]
    fn syntax_error_reports_span() {
        match parse_method("int f(){ return ; ; }") {
            Err(ParseError::Syntax { span, .. }) => assert!(span.0 > 0),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn statement_forms_parse() {
        let src = r#"
            public int work(int n, int[] data) throws Bad {
                int total = 0;
                for (int i = 0; i < n; i++) {
                    total += data[i];
                }
                while (total > 100) {
                    total = total - 10;
                    if (total == 55) { break; } else { continue; }
                }
                do { total++; } while (total < 0);
                switch (total) {
                    case 0: { log.print(total); }
                    case 1: { total = 2; }
                }
                try (Closer c = res.open()) {
                    c.use(total);
                } catch (Error e) {
                    throw e;
                } finally {
                    log.done();
                }
                return total > 0 ? total : -total;
            }"#;
        let ast = parse(src);
        assert_eq!(count_type(&ast, NodeType::ForStatement), 1);
        assert_eq!(count_type(&ast, NodeType::WhileStatement), 1);
        assert_eq!(count_type(&ast, NodeType::DowhileStatement), 1);
        assert_eq!(count_type(&ast, NodeType::SwitchcaseStatement), 1);
        assert_eq!(count_type(&ast, NodeType::TryWithResourcesStatement), 1);
        assert_eq!(count_type(&ast, NodeType::CatchClause), 1);
        assert_eq!(count_type(&ast, NodeType::FinallyClause), 1);
        assert_eq!(count_type(&ast, NodeType::TernaryExpression), 1);
        assert_eq!(count_type(&ast, NodeType::ResourceSpecification), 1);
        assert_eq!(count_type(&ast, NodeType::UpdateExpression), 2);
    }

    #[test]
    fn token_stream_is_preserved() {
        let src = "int max(int a,int b){int max=a; if(a<b){max=b;} return max;}";
        let ast = parse(src);
        let mut tree_tokens = Vec::new();
        for id in ast.preorder(ast.root) {
            if let Some(t) = &ast.node(id).token {
                tree_tokens.push(t.clone());
            }
        }
        let lexed: Vec<String> = super::super::lexer::lex(src)
            .unwrap()
            .into_iter()
            .map(|t| t.text)
            .collect();
        assert_eq!(tree_tokens, lexed);
    }
}
