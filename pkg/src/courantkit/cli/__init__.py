from .document import Command, CoverSpec, Document, print_document
from .main import main
from .parser import parse, parse_expression
from .runner import CommandResult, Runner, all_passed, render, run

__all__ = ["Command", "CommandResult", "CoverSpec", "Document", "Runner", "all_passed", "main", "parse",
           "parse_expression", "print_document", "render", "run"]
