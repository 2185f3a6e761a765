"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

Script = Literal["iast", "devanagari"]


class JoinRequest(BaseModel):
    first: str
    second: str
    script: Script = "iast"


class JoinAlternative(BaseModel):
    text: str
    iast: str
    rules: list[int]


class JoinResponse(BaseModel):
    alternatives: list[JoinAlternative]


class FormsRequest(BaseModel):
    word: str
    script: Script = "iast"


class FormRecord(BaseModel):
    surface: str
    kind: str
    context: str
    rules: list[int]


class FormsResponse(BaseModel):
    word: str
    forms: list[FormRecord]


class SearchRequest(BaseModel):
    word: str
    text: str | None = None
    corpus_id: str | None = None
    script: Script = "iast"
    strict_boundaries: bool = False


class MatchRecord(BaseModel):
    offset: int
    length: int
    line: int
    surface: str
    kind: str


class SearchResponse(BaseModel):
    word: str
    matches: list[MatchRecord]


class RuleRecord(BaseModel):
    id: int
    sutra: str
    set: int
    name: str | None
    optional: bool


class CorpusCreateRequest(BaseModel):
    text: str
    script: Script = "iast"
    source: str = "<upload>"


class CorpusInfo(BaseModel):
    corpus_id: str
    source: str
    chars: int
    lines: int


class TransliterateRequest(BaseModel):
    text: str
    to: Script


class TransliterateResponse(BaseModel):
    text: str
