"""Syntax-only C front-end: parsing, inlining, normalization, serialization.

No preprocessing, no type checking; just enough grammar to turn real-world
C functions into trees that survive macro expansion and canonical rewrites.
"""

from vulnspan.cfront.lexer import Token, tokenize
from vulnspan.cfront.cparse import (
    Node,
    SyntaxTree,
    FunctionDef,
    MacroDef,
    parse_function,
    parse_statements,
    parse_fragment,
    scan_file,
    find_enclosing_function,
)
from vulnspan.cfront.inline import InlineConfig, inline_expand, harvest_definitions
from vulnspan.cfront.normalize import NormalizedAst, normalize_ast
from vulnspan.cfront.sequence import AstSequence, ast_to_sequence

__all__ = [
    "Token",
    "tokenize",
    "Node",
    "SyntaxTree",
    "FunctionDef",
    "MacroDef",
    "parse_function",
    "parse_statements",
    "parse_fragment",
    "scan_file",
    "find_enclosing_function",
    "InlineConfig",
    "inline_expand",
    "harvest_definitions",
    "NormalizedAst",
    "normalize_ast",
    "AstSequence",
    "ast_to_sequence",
]
