"""HTTP JSON facade over tagging, corpus queries, and the exercises.

Queries run against a snapshot with sensitive documents removed unless the
caller passes include_sensitive=true. Exercise answers never leave the
server: task payloads carry a task_id and checking happens server-side.
The corpus snapshot is built once and replaced wholesale on reload, so a
request sees either the old snapshot or the new one, never a mixture.
"""

from __future__ import annotations

import os
import sys
import threading
from dataclasses import asdict, dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .corpus import DocMeta, ingest, load_corpus, parse_meta_filters
from .errors import CorpwsError, NoMaterial, QueryError
from .query import (
    CorpusSnapshot,
    QueryExpr,
    collocations,
    concordance,
    frequency_list,
    keywords,
    ngrams,
)
from .resources import default_corpus
from .tagset import BasicCat
from .tiwtiadur import (
    BandTable,
    build_bands,
    check_answers,
    cloze_create,
    identify_task,
    profile,
    word_task,
)

DEFAULT_BIND = "127.0.0.1:8000"
MAX_STORED_TASKS = 4096


@dataclass
class ServiceState:
    """Immutable snapshot bundle; rebuilt as a whole on reload."""

    full: CorpusSnapshot
    public: CorpusSnapshot
    bands: BandTable

    @classmethod
    def build(cls, manifest: str | None = None) -> "ServiceState":
        corpus = default_corpus() if manifest is None else load_corpus(
            manifest)
        full = CorpusSnapshot(corpus)
        public = CorpusSnapshot(corpus.without_sensitive())
        return cls(full=full, public=public, bands=build_bands(full))


@dataclass
class TaskStore:
    """task_id -> correct answers; the service's only mutable state."""

    answers: dict[str, tuple[str, ...]] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def remember(self, task_id: str, answers: tuple[str, ...]) -> None:
        with self.lock:
            while len(self.answers) >= MAX_STORED_TASKS:
                self.answers.pop(next(iter(self.answers)))
            self.answers[task_id] = answers

    def recall(self, task_id: str) -> tuple[str, ...] | None:
        with self.lock:
            return self.answers.get(task_id)


class ClozeParams(BaseModel):
    genre: str | None = None
    gap_frequency: int
    text_length: int
    seed: int


class CheckParams(BaseModel):
    task_id: str
    fills: list[str]


class IdentifyParams(BaseModel):
    band: str
    word_type: str
    max_sentences: int
    seed: int


class WordTaskParams(BaseModel):
    word: str
    pos: str | None = None
    max_lines: int = 10
    seed: int = 0


class ProfileParams(BaseModel):
    text: str
    highlight_non_level: bool = False


def _basic_cat(code: str) -> BasicCat:
    try:
        return BasicCat(code)
    except ValueError:
        raise QueryError(f"unknown basic category {code!r}") from None


def _error(status: int, error: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"error": error, "message": message})


def create_app(manifest: str | None = None,
               static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="corpws", docs_url=None, redoc_url=None)
    app.state.svc = ServiceState.build(manifest)
    app.state.manifest = manifest
    app.state.tasks = TaskStore()

    def svc(request: Request) -> ServiceState:
        return request.app.state.svc

    def snapshot_for(request: Request,
                     include_sensitive: bool) -> CorpusSnapshot:
        state = svc(request)
        return state.full if include_sensitive else state.public

    # ------------------------------------------------------------ errors

    @app.exception_handler(NoMaterial)
    async def _no_material(request, exc):
        return _error(404, "no_material", str(exc))

    @app.exception_handler(CorpwsError)
    async def _domain_error(request, exc):
        return _error(400, "invalid", str(exc))

    @app.exception_handler(ValueError)
    async def _value_error(request, exc):
        return _error(400, "invalid", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request, exc):
        return _error(400, "invalid_request", str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request, exc):
        label = "not_found" if exc.status_code == 404 else "http_error"
        return _error(exc.status_code, label, str(exc.detail))

    # ------------------------------------------------------------ corpus

    @app.get("/api/corpus/stats")
    def corpus_stats(request: Request):
        corpus = svc(request).full.corpus
        stats = corpus.stats()
        stats["language_types"] = corpus.stats_by("language_type")
        stats["genres"] = corpus.stats_by("genre")
        return stats

    @app.get("/api/tag")
    def tag_text(text: str):
        meta = DocMeta(id="api", language_type="written",
                       genre="miscellaneous", sensitive=False)
        doc = ingest(text, meta)
        rows = [{
            "index": n,
            "token": tok.text,
            "position": f"{tok.sentence},{tok.position}",
            "lemma": tok.lemma,
            "basic": tok.basic.value,
            "rich": tok.rich,
            "mutation": tok.mutation.value,
            "sem": tok.sem,
        } for n, tok in enumerate(doc.tokens, 1)]
        return {"rows": rows}

    # ----------------------------------------------------------- queries

    @app.get("/api/query/concordance")
    def query_concordance(request: Request, expr: str,
                          context: int = 5, limit: int | None = None,
                          where: list[str] = Query(default=[]),
                          include_sensitive: bool = False):
        snap = snapshot_for(request, include_sensitive)
        lines = concordance(snap, QueryExpr.parse(expr),
                            context_words=context, limit=limit,
                            where=parse_meta_filters(where) or None)
        return {"lines": [asdict(kl) for kl in lines]}

    @app.get("/api/query/frequency")
    def query_frequency(request: Request, unit: str = "token",
                        limit: int | None = None,
                        include_sensitive: bool = False):
        snap = snapshot_for(request, include_sensitive)
        rows = frequency_list(snap, unit=unit, limit=limit)
        return {"rows": [{"value": v, "count": c} for v, c in rows]}

    @app.get("/api/query/collocations")
    def query_collocations(request: Request, node: str, span: int = 3,
                           stat: str = "MI", min_count: int = 1,
                           unit: str = "token", limit: int | None = None,
                           include_sensitive: bool = False):
        snap = snapshot_for(request, include_sensitive)
        rows = collocations(snap, node, span=span, stat=stat,
                            min_count=min_count, unit=unit)
        if limit is not None:
            rows = rows[:limit]
        return {"rows": [{"collocate": w, "observed": o,
                          "expected": e, "score": s}
                         for w, o, e, s in rows]}

    @app.get("/api/query/ngrams")
    def query_ngrams(request: Request, n: int, limit: int | None = None,
                     unit: str = "token",
                     include_sensitive: bool = False):
        snap = snapshot_for(request, include_sensitive)
        rows = ngrams(snap, n, limit=limit, unit=unit)
        return {"rows": [{"gram": list(g), "count": c} for g, c in rows]}

    @app.get("/api/query/keywords")
    def query_keywords(request: Request,
                       target: list[str] = Query(default=[]),
                       reference: list[str] = Query(default=["rest"]),
                       limit: int | None = None,
                       include_sensitive: bool = False):
        snap = snapshot_for(request, include_sensitive)
        ref = ("rest" if reference == ["rest"]
               else parse_meta_filters(reference))
        rows = keywords(snap, parse_meta_filters(target), reference=ref,
                        limit=limit)
        return {"rows": [{"word": w, "target_count": a,
                          "reference_count": b, "ll": ll,
                          "direction": d}
                         for w, a, b, ll, d in rows]}

    # --------------------------------------------------------- exercises

    @app.post("/api/tiwtiadur/cloze")
    def tiwtiadur_cloze(request: Request, params: ClozeParams):
        task = cloze_create(svc(request).full, params.genre,
                            params.gap_frequency, params.text_length,
                            params.seed)
        request.app.state.tasks.remember(task.task_id, task.answers)
        # ordered answers stay server-side; the shuffled bank is part of
        # the exercise display
        return {"task_id": task.task_id, "doc_id": task.doc_id,
                "display": list(task.display), "bank": list(task.bank),
                "gap_count": len(task.answers), "params": task.params}

    @app.post("/api/tiwtiadur/cloze/check")
    def tiwtiadur_check(request: Request, params: CheckParams):
        answers = request.app.state.tasks.recall(params.task_id)
        if answers is None:
            raise StarletteHTTPException(
                404, detail=f"unknown task {params.task_id!r}")
        results = check_answers(answers, params.fills)
        return {"task_id": params.task_id, "results": results,
                "correct": sum(results), "total": len(results)}

    @app.post("/api/tiwtiadur/identify")
    def tiwtiadur_identify(request: Request, params: IdentifyParams):
        state = svc(request)
        task = identify_task(state.full, state.bands, params.band,
                             _basic_cat(params.word_type),
                             params.max_sentences, params.seed)
        request.app.state.tasks.remember(task.task_id, (task.answer,))
        return {"task_id": task.task_id, "band": task.band,
                "word_type": task.word_type,
                "lines": [asdict(line) for line in task.lines],
                "params": task.params}

    @app.post("/api/tiwtiadur/wordtask")
    def tiwtiadur_wordtask(request: Request, params: WordTaskParams):
        pos = _basic_cat(params.pos) if params.pos is not None else None
        task = word_task(svc(request).full, params.word, pos=pos,
                         max_lines=params.max_lines, seed=params.seed)
        # the reveal merely echoes the word the caller asked about
        return {"task_id": task.task_id, "word": task.word,
                "pos": task.pos,
                "lines": [asdict(line) for line in task.lines],
                "reveal": task.reveal, "params": task.params}

    @app.post("/api/tiwtiadur/profile")
    def tiwtiadur_profile(request: Request, params: ProfileParams):
        prof = profile(params.text, svc(request).bands,
                       highlight_non_level=params.highlight_non_level)
        return asdict(prof)

    # ------------------------------------------------------------ static

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="ui")
    else:
        @app.get("/")
        def index():
            return {"service": "corpws",
                    "endpoints": ["/api/corpus/stats", "/api/tag",
                                  "/api/query/*", "/api/tiwtiadur/*"]}

    return app


def reload_snapshot(app: FastAPI) -> None:
    """Rebuild the snapshot bundle and swap it in atomically."""
    app.state.svc = ServiceState.build(app.state.manifest)


def run(bind: str | None = None, manifest: str | None = None,
        static_dir: str | None = None) -> None:
    import uvicorn

    addr = bind or os.environ.get("CORPWS_BIND") or DEFAULT_BIND
    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"error: bind address must be host:port, got {addr!r}",
              file=sys.stderr)
        raise SystemExit(1)
    if static_dir is not None and not Path(static_dir).is_dir():
        print(f"error: static directory {static_dir!r} does not exist",
              file=sys.stderr)
        raise SystemExit(1)
    try:
        app = create_app(manifest=manifest, static_dir=static_dir)
    except Exception as exc:
        print(f"error: service startup failed: {exc}", file=sys.stderr)
        raise SystemExit(1)
    uvicorn.run(app, host=host, port=int(port_text))
