//! Core library for hierarchical code summarization.
//!
//! The pipeline turns a Java method into a three-layer representation and
//! feeds it to a heterogeneous encoder-decoder:
//!
//! ```text
//! source ──parse──▶ AST ──subtokens──▶ T ──linearize──▶ L (node sequence)
//!                                      │
//!                                      └──extract──▶ subtrees ST + reduced tree T'
//!                                                    │
//!                                                    └──static analysis──▶ graph G
//!                                                       (AST / CD / DF / NS edges)
//! ```
//!
//! * [`ast`] — lexer, recursive-descent parser for the supported Java subset,
//!   sub-token splitting and sequence linearization.
//! * [`hierarchy`] — statement/expression subtree extraction and the reduced
//!   tree with placeholders.
//! * [`graph`] — control-flow graph, control-dependence, reaching definitions
//!   and next-subtree edges over the reduced tree.
//! * [`hcr`] — the bundle tying all layers together plus JSON/DOT export.
//! * [`tensor`] / [`autodiff`] / [`optim`] — a small dense reverse-mode
//!   autodiff engine with AdamW and a warm-up schedule.
//! * [`model`] — sequence encoder, tree convolution encoder, heterogeneous
//!   graph transformer, cross-layer attention, gating and the serial decoder.
//! * [`corpus`] / [`bpe`] — dataset ingestion, preprocessing and byte-pair
//!   encoding tokenizers.
//! * [`train`] — the training loop with early stopping.
//! * [`metrics`] — BLEU-4, ROUGE-L and token-level F1.

pub mod ast;
pub mod autodiff;
pub mod bpe;
pub mod checkpoint;
pub mod corpus;
pub mod graph;
pub mod hcr;
pub mod hierarchy;
pub mod metrics;
pub mod model;
pub mod optim;
pub mod tensor;
pub mod train;

pub use ast::{Ast, AstNode, LinearSeq, NodeId, NodeType, ParseError};
pub use graph::{EdgeFlags, EdgeType, HetGraph};
pub use hcr::HcrBundle;
pub use hierarchy::{AlignmentMap, ReducedTree, Subtree};
pub use model::{ModelConfig, ModelParams};
pub use tensor::Tensor;
