from .corpus_service import CorpusService, corpus_run
from .invariant_service import InvariantService
from .parser_service import ParserService, parse_expression

__all__ = ["CorpusService", "InvariantService", "ParserService", "corpus_run", "parse_expression"]
