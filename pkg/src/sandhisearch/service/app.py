"""The HTTP service: joining, word forms, corpus upload and search.

Corpora are kept in process memory so that repeated searches against one
text pay the normalization cost once; a search may also carry its text
inline.  Devanagari input is converted at the edge and everything runs in
IAST internally; responses carry both spellings where that makes sense.
"""

from __future__ import annotations

import threading
import warnings

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..corpus import DecodeError, Corpus, ingest, search as corpus_search
from ..engine import EmptyWord, sandhi_process
from ..phonemes import UnknownGrapheme
from ..rules import catalogue
from ..translit import LossyTransliteration, UnsupportedCodePoint, deva_to_iast, iast_to_deva
from ..wordforms import cached_word_forms
from .schemas import (
    CorpusCreateRequest,
    CorpusInfo,
    FormRecord,
    FormsRequest,
    FormsResponse,
    JoinAlternative,
    JoinRequest,
    JoinResponse,
    MatchRecord,
    RuleRecord,
    SearchRequest,
    SearchResponse,
    TransliterateRequest,
    TransliterateResponse,
)

_INPUT_ERRORS = (UnknownGrapheme, EmptyWord, DecodeError, UnsupportedCodePoint)


def _bad_input(exc: Exception) -> HTTPException:
    detail = {"error": type(exc).__name__, "message": str(exc)}
    position = getattr(exc, "position", None)
    if position is not None:
        detail["position"] = position
    return HTTPException(status_code=400, detail=detail)


def _from_script(text: str, script: str) -> str:
    return deva_to_iast(text) if script == "devanagari" else text


def _to_script(text: str, script: str) -> str:
    if script != "devanagari":
        return text
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LossyTransliteration)
        return iast_to_deva(text)


def create_app() -> FastAPI:
    app = FastAPI(title="sandhisearch", version=__version__)
    app.state.corpora = {}
    app.state.lock = threading.Lock()
    app.state.next_id = 1

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.get("/rules", response_model=list[RuleRecord])
    def rules():
        return catalogue()

    @app.post("/join", response_model=JoinResponse)
    def join(req: JoinRequest):
        try:
            first = _from_script(req.first, req.script)
            second = _from_script(req.second, req.script)
            result = sandhi_process(first, second)
        except _INPUT_ERRORS as exc:
            raise _bad_input(exc)
        alternatives = []
        seen = set()
        for alt in result:
            for s in alt.strings():
                if s not in seen:
                    seen.add(s)
                    alternatives.append(JoinAlternative(
                        text=_to_script(s, req.script), iast=s,
                        rules=list(alt.rules)))
        return JoinResponse(alternatives=alternatives)

    @app.post("/forms", response_model=FormsResponse)
    def forms(req: FormsRequest):
        try:
            word = _from_script(req.word, req.script)
            form_set = cached_word_forms(word)
        except _INPUT_ERRORS as exc:
            raise _bad_input(exc)
        return FormsResponse(word=word, forms=[FormRecord(**r) for r in form_set.to_records()])

    def _get_corpus(req: SearchRequest) -> Corpus:
        if req.text is not None:
            return ingest(req.text, req.script)
        if req.corpus_id is not None:
            corpus = app.state.corpora.get(req.corpus_id)
            if corpus is None:
                raise HTTPException(status_code=404,
                                    detail={"error": "UnknownCorpus",
                                            "message": req.corpus_id})
            return corpus
        raise HTTPException(status_code=400,
                            detail={"error": "MissingCorpus",
                                    "message": "provide text or corpus_id"})

    @app.post("/search", response_model=SearchResponse)
    def search(req: SearchRequest):
        try:
            word = _from_script(req.word, req.script)
            corpus = _get_corpus(req)
            matches = corpus_search(word, corpus, strict=req.strict_boundaries)
        except _INPUT_ERRORS as exc:
            raise _bad_input(exc)
        return SearchResponse(word=word, matches=[
            MatchRecord(offset=m.offset, length=m.length, line=m.line,
                        surface=m.surface, kind=m.kind)
            for m in matches
        ])

    @app.post("/corpora", response_model=CorpusInfo)
    def add_corpus(req: CorpusCreateRequest):
        try:
            corpus = ingest(req.text, req.script, source=req.source)
        except _INPUT_ERRORS as exc:
            raise _bad_input(exc)
        with app.state.lock:
            corpus_id = f"c{app.state.next_id}"
            app.state.next_id += 1
            app.state.corpora[corpus_id] = corpus
        return CorpusInfo(corpus_id=corpus_id, source=corpus.source,
                          chars=len(corpus.text), lines=len(corpus.line_index))

    @app.get("/corpora", response_model=list[CorpusInfo])
    def list_corpora():
        with app.state.lock:
            items = list(app.state.corpora.items())
        return [CorpusInfo(corpus_id=cid, source=c.source, chars=len(c.text),
                           lines=len(c.line_index)) for cid, c in items]

    @app.post("/transliterate", response_model=TransliterateResponse)
    def transliterate(req: TransliterateRequest):
        try:
            if req.to == "iast":
                return TransliterateResponse(text=deva_to_iast(req.text))
            return TransliterateResponse(text=_to_script(req.text, "devanagari"))
        except _INPUT_ERRORS as exc:
            raise _bad_input(exc)

    return app
