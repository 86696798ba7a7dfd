//! Typed syntax trees for the supported Java method subset.
//!
//! Trees are stored in an arena ([`Ast`]); node ids are indices into it.
//! After [`Ast::insert_subtoken_nodes`] every leaf carries a token and every
//! token-bearing node is a leaf, which is what the downstream sequence and
//! model layers rely on.

mod lexer;
mod parser;

pub use lexer::{lex, LexedToken, TokenKind};
pub use parser::parse_method;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Node id: index into the owning [`Ast`] arena.
pub type NodeId = usize;

/// Character span `(start, end)` in the original source.
pub type Span = (usize, usize);

/// Parse failures for the supported subset.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {span:?}: {message}")]
    Syntax { span: Span, message: String },
    #[error("unsupported construct `{construct}` at {span:?}")]
    UnsupportedConstruct { span: Span, construct: String },
}

/// The closed node-type vocabulary of the supported grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeType {
    MethodDeclaration,
    MethodHeader,
    ParameterList,
    FormalParameter,
    ArgumentList,
    // simple statements
    VariableDeclaration,
    ReturnStatement,
    MethodInvocation,
    AssignmentStatement,
    BreakStatement,
    ContinueStatement,
    ThrowStatement,
    ExpressionStatement,
    // compound statements
    IfStatement,
    WhileStatement,
    ForStatement,
    DowhileStatement,
    SwitchcaseStatement,
    TryStatement,
    TryWithResourcesStatement,
    CatchClause,
    FinallyClause,
    // expressions
    TernaryExpression,
    AssignmentExpression,
    InstanceofExpression,
    CastExpression,
    BinaryExpression,
    UnaryExpression,
    ResourceSpecification,
    UpdateExpression,
    FieldAccess,
    ArrayAccess,
    // leaves
    Identifier,
    TypeIdentifier,
    Literal,
    This,
    Modifier,
    Keyword,
    Operator,
    Punct,
    SubToken,
    // reduced-tree placeholder standing in for an extracted subtree
    SubtreePlaceholder,
}

impl NodeType {
    /// Every variant, in a fixed order; used to build type vocabularies.
    pub const ALL: [NodeType; 41] = [
        NodeType::MethodDeclaration,
        NodeType::MethodHeader,
        NodeType::ParameterList,
        NodeType::FormalParameter,
        NodeType::ArgumentList,
        NodeType::VariableDeclaration,
        NodeType::ReturnStatement,
        NodeType::MethodInvocation,
        NodeType::AssignmentStatement,
        NodeType::BreakStatement,
        NodeType::ContinueStatement,
        NodeType::ThrowStatement,
        NodeType::ExpressionStatement,
        NodeType::IfStatement,
        NodeType::WhileStatement,
        NodeType::ForStatement,
        NodeType::DowhileStatement,
        NodeType::SwitchcaseStatement,
        NodeType::TryStatement,
        NodeType::TryWithResourcesStatement,
        NodeType::CatchClause,
        NodeType::FinallyClause,
        NodeType::TernaryExpression,
        NodeType::AssignmentExpression,
        NodeType::InstanceofExpression,
        NodeType::CastExpression,
        NodeType::BinaryExpression,
        NodeType::UnaryExpression,
        NodeType::ResourceSpecification,
        NodeType::UpdateExpression,
        NodeType::FieldAccess,
        NodeType::ArrayAccess,
        NodeType::Identifier,
        NodeType::TypeIdentifier,
        NodeType::Literal,
        NodeType::This,
        NodeType::Modifier,
        NodeType::Keyword,
        NodeType::Operator,
        NodeType::Punct,
        NodeType::SubToken,
        NodeType::SubtreePlaceholder,
    ];

    /// Index into [`NodeType::ALL`]; stable embedding-table row for the type.
    pub fn index(self) -> usize {
        NodeType::ALL.iter().position(|t| *t == self).unwrap()
    }

    /// True for the eight simple-statement productions.
    pub fn is_simple_statement(self) -> bool {
        matches!(
            self,
            NodeType::VariableDeclaration
                | NodeType::ReturnStatement
                | NodeType::MethodInvocation
                | NodeType::AssignmentStatement
                | NodeType::BreakStatement
                | NodeType::ContinueStatement
                | NodeType::ThrowStatement
                | NodeType::ExpressionStatement
        )
    }

    /// True for the compound-statement productions.
    pub fn is_compound_statement(self) -> bool {
        matches!(
            self,
            NodeType::IfStatement
                | NodeType::WhileStatement
                | NodeType::ForStatement
                | NodeType::DowhileStatement
                | NodeType::SwitchcaseStatement
                | NodeType::TryStatement
                | NodeType::TryWithResourcesStatement
        )
    }

    /// True for the expression productions (including primary expressions).
    pub fn is_expression(self) -> bool {
        matches!(
            self,
            NodeType::TernaryExpression
                | NodeType::AssignmentExpression
                | NodeType::InstanceofExpression
                | NodeType::CastExpression
                | NodeType::BinaryExpression
                | NodeType::UnaryExpression
                | NodeType::ResourceSpecification
                | NodeType::UpdateExpression
                | NodeType::MethodInvocation
                | NodeType::FieldAccess
                | NodeType::ArrayAccess
                | NodeType::Identifier
                | NodeType::Literal
                | NodeType::This
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NodeType::MethodDeclaration => "method_declaration",
            NodeType::MethodHeader => "method_header",
            NodeType::ParameterList => "parameter_list",
            NodeType::FormalParameter => "formal_parameter",
            NodeType::ArgumentList => "argument_list",
            NodeType::VariableDeclaration => "variable_declaration",
            NodeType::ReturnStatement => "return_statement",
            NodeType::MethodInvocation => "method_invocation",
            NodeType::AssignmentStatement => "assignment_statement",
            NodeType::BreakStatement => "break_statement",
            NodeType::ContinueStatement => "continue_statement",
            NodeType::ThrowStatement => "throw_statement",
            NodeType::ExpressionStatement => "expression_statement",
            NodeType::IfStatement => "if_statement",
            NodeType::WhileStatement => "while_statement",
            NodeType::ForStatement => "for_statement",
            NodeType::DowhileStatement => "dowhile_statement",
            NodeType::SwitchcaseStatement => "switchcase_statement",
            NodeType::TryStatement => "try_statement",
            NodeType::TryWithResourcesStatement => "try_with_resources_statement",
            NodeType::CatchClause => "catch_clause",
            NodeType::FinallyClause => "finally_clause",
            NodeType::TernaryExpression => "ternary_expression",
            NodeType::AssignmentExpression => "assignment_expression",
            NodeType::InstanceofExpression => "instanceof_expression",
            NodeType::CastExpression => "cast_expression",
            NodeType::BinaryExpression => "binary_expression",
            NodeType::UnaryExpression => "unary_expression",
            NodeType::ResourceSpecification => "resource_specification",
            NodeType::UpdateExpression => "update_expression",
            NodeType::FieldAccess => "field_access",
            NodeType::ArrayAccess => "array_access",
            NodeType::Identifier => "identifier",
            NodeType::TypeIdentifier => "type_identifier",
            NodeType::Literal => "literal",
            NodeType::This => "this",
            NodeType::Modifier => "modifier",
            NodeType::Keyword => "keyword",
            NodeType::Operator => "operator",
            NodeType::Punct => "punct",
            NodeType::SubToken => "sub_token",
            NodeType::SubtreePlaceholder => "subtree_placeholder",
        }
    }
}

impl std::fmt::Display for NodeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One syntax-tree node.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AstNode {
    pub id: NodeId,
    pub node_type: NodeType,
    /// Non-empty exactly on leaves once sub-token insertion has run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub token: Option<String>,
    pub children: Vec<NodeId>,
    pub span: Span,
}

impl AstNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn has_token(&self) -> bool {
        self.token.as_deref().map_or(false, |t| !t.is_empty())
    }
}

/// Arena-backed syntax tree for one method.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Ast {
    pub nodes: Vec<AstNode>,
    pub root: NodeId,
}

impl Ast {
    pub fn node(&self, id: NodeId) -> &AstNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Pre-order node ids starting at `root`.
    pub fn preorder(&self, root: NodeId) -> Vec<NodeId> {
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            order.push(id);
            for &child in self.nodes[id].children.iter().rev() {
                stack.push(child);
            }
        }
        order
    }

    /// id of the parent of each node (root maps to itself).
    pub fn parents(&self) -> Vec<NodeId> {
        let mut parent = vec![self.root; self.nodes.len()];
        for node in &self.nodes {
            for &c in &node.children {
                parent[c] = node.id;
            }
        }
        parent
    }

    /// Splits a leaf token into sub-token pieces.
    ///
    /// Boundaries are camelCase transitions, underscores and digit/letter
    /// transitions; pieces come back lowercased. Tokens containing anything
    /// other than ASCII alphanumerics / `_` / `$` (operators, punctuation,
    /// quoted literals) are returned unchanged as a single piece.
    pub fn split_subtokens(token: &str) -> Vec<String> {
        if token.is_empty() {
            return vec![];
        }
        let word_like = token
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '$');
        if !word_like {
            return vec![token.to_string()];
        }
        let chars: Vec<char> = token.chars().collect();
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for (i, &c) in chars.iter().enumerate() {
            if c == '_' || c == '$' {
                if !cur.is_empty() {
                    pieces.push(std::mem::take(&mut cur));
                }
                continue;
            }
            if !cur.is_empty() {
                let prev = chars[i - 1];
                let boundary = (c.is_ascii_uppercase() && prev.is_ascii_lowercase())
                    || (c.is_ascii_uppercase()
                        && prev.is_ascii_uppercase()
                        && chars.get(i + 1).map_or(false, |n| n.is_ascii_lowercase()))
                    || (c.is_ascii_digit() != prev.is_ascii_digit() && prev != '_' && prev != '$');
                if boundary {
                    pieces.push(std::mem::take(&mut cur));
                }
            }
            cur.push(c.to_ascii_lowercase());
        }
        if !cur.is_empty() {
            pieces.push(cur);
        }
        if pieces.is_empty() {
            // token was all separators; keep it verbatim
            pieces.push(token.to_string());
        }
        pieces
    }

    /// Inserts sub-token children under every leaf whose token splits into
    /// more than one piece; the parent's token moves wholly into the
    /// children. Single-piece word tokens are lowercased in place.
    /// Idempotent.
    pub fn insert_subtoken_nodes(&mut self) {
        let ids: Vec<NodeId> = (0..self.nodes.len()).collect();
        for id in ids {
            if !self.nodes[id].is_leaf() || !self.nodes[id].has_token() {
                continue;
            }
            if self.nodes[id].node_type == NodeType::SubToken {
                continue;
            }
            let token = self.nodes[id].token.clone().unwrap();
            let pieces = Self::split_subtokens(&token);
            if pieces.len() == 1 {
                self.nodes[id].token = Some(pieces.into_iter().next().unwrap());
                continue;
            }
            let (start, _) = self.nodes[id].span;
            // map each piece back to its offsets within the original token
            let mut offset = 0usize;
            let mut children = Vec::with_capacity(pieces.len());
            let lower: Vec<char> = token.chars().map(|c| c.to_ascii_lowercase()).collect();
            for piece in pieces {
                let plen = piece.chars().count();
                // advance past separators to the piece start
                let mut at = offset;
                while at + plen <= lower.len()
                    && lower[at..at + plen].iter().collect::<String>() != piece
                {
                    at += 1;
                }
                let new_id = self.nodes.len();
                self.nodes.push(AstNode {
                    id: new_id,
                    node_type: NodeType::SubToken,
                    token: Some(piece),
                    children: vec![],
                    span: (start + at, start + at + plen),
                });
                children.push(new_id);
                offset = at + plen;
            }
            self.nodes[id].token = None;
            self.nodes[id].children = children;
        }
    }

    /// `true` once every token-bearing node is a leaf and vice versa for
    /// nodes introduced by the parser (structural nodes always have children).
    pub fn check_token_leaf_invariant(&self) -> bool {
        self.nodes
            .iter()
            .all(|n| n.has_token() == n.is_leaf())
    }
}

/// The linearized node sequence `L`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearSeq {
    /// Node ids in depth-first pre-order.
    pub nodes: Vec<NodeId>,
    /// Indices `i` such that `nodes[i]` carries a non-empty token.
    pub token_positions: Vec<usize>,
}

impl LinearSeq {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Depth-first pre-order linearization of the (sub-tokenized) tree.
pub fn linearize(ast: &Ast) -> LinearSeq {
    let nodes = ast.preorder(ast.root);
    let token_positions = nodes
        .iter()
        .enumerate()
        .filter(|(_, &id)| ast.node(id).has_token())
        .map(|(i, _)| i)
        .collect();
    LinearSeq {
        nodes,
        token_positions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_camel_case() {
        assert_eq!(
            Ast::split_subtokens("getItemCount"),
            vec!["get", "item", "count"]
        );
    }

    #[test]
    fn split_no_boundary() {
        assert_eq!(Ast::split_subtokens("max"), vec!["max"]);
    }

    #[test]
    fn split_digits_and_underscores() {
        assert_eq!(
            Ast::split_subtokens("num2str_v2"),
            vec!["num", "2", "str", "v", "2"]
        );
    }

    #[test]
    fn split_operator_unchanged() {
        assert_eq!(Ast::split_subtokens("<"), vec!["<"]);
        assert_eq!(Ast::split_subtokens("<str>"), vec!["<str>"]);
    }

    #[test]
    fn split_acronym_boundary() {
        assert_eq!(Ast::split_subtokens("XMLParser"), vec!["xml", "parser"]);
    }

    #[test]
    fn subtoken_insertion_splits_and_clears_parent() {
        let src = "int f(){int itemCount = 0;}";
        let mut ast = parse_method(src).unwrap();
        ast.insert_subtoken_nodes();
        let node = ast
            .nodes
            .iter()
            .find(|n| n.node_type == NodeType::Identifier && n.children.len() == 2)
            .expect("split identifier");
        assert!(node.token.is_none());
        let pieces: Vec<&str> = node
            .children
            .iter()
            .map(|&c| ast.node(c).token.as_deref().unwrap())
            .collect();
        assert_eq!(pieces, vec!["item", "count"]);
        assert!(ast.check_token_leaf_invariant());
    }

    #[test]
    fn subtoken_insertion_idempotent() {
        let src = "int f(){int itemCount = myMax2;}";
        let mut ast = parse_method(src).unwrap();
        ast.insert_subtoken_nodes();
        let once = format!("{ast:?}");
        ast.insert_subtoken_nodes();
        assert_eq!(once, format!("{ast:?}"));
    }

    #[test]
    fn linearize_single_statement_preorder() {
        let mut ast = parse_method("int f(){return max;}").unwrap();
        ast.insert_subtoken_nodes();
        let seq = linearize(&ast);
        let ret = seq
            .nodes
            .iter()
            .position(|&id| ast.node(id).node_type == NodeType::ReturnStatement)
            .unwrap();
        let kinds: Vec<NodeType> = seq.nodes[ret..ret + 4]
            .iter()
            .map(|&id| ast.node(id).node_type)
            .collect();
        assert_eq!(
            kinds,
            vec![
                NodeType::ReturnStatement,
                NodeType::Keyword,
                NodeType::Identifier,
                NodeType::Punct
            ]
        );
        assert_eq!(ast.node(seq.nodes[ret + 2]).token.as_deref(), Some("max"));
    }

    #[test]
    fn preorder_parent_before_descendants() {
        let mut ast = parse_method("int f(int a){if(a<2){a=3;}return a;}").unwrap();
        ast.insert_subtoken_nodes();
        let seq = linearize(&ast);
        let pos: std::collections::HashMap<NodeId, usize> =
            seq.nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        for node in &ast.nodes {
            for &c in &node.children {
                assert!(pos[&node.id] < pos[&c]);
            }
        }
        assert_eq!(seq.nodes.len(), ast.len());
    }
}
