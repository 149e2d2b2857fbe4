"""HTTP/JSON service over a loaded index, company store, and feedback log.

The index file is never mutated; the click-feedback log is the only write
path. Feedback folds into ranking counts at startup and then on a fixed
interval, keeping search reads lock-free in between.
"""

from __future__ import annotations

import asyncio
import contextlib
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, model_validator

from . import analytics
from .companies import AliasTable, CompanyStore
from .errors import (
    SkillgrepError,
    StartupError,
    UnknownIndustry,
    UnknownPosting,
    UnknownSkill,
)
from .feedback import FeedbackStore
from .persist import FORMAT_VERSION, load_index
from .query import Query, find_contacts, search_payload


@dataclass
class ServiceConfig:
    index_path: str
    attribute_store_path: str
    alias_table_path: str
    listen_address: str = "127.0.0.1:8080"
    result_limit_default: int = 40
    cors_allowed_origins: tuple[str, ...] = ("*",)
    feedback_log_path: str | None = None
    feedback_fold_interval: float = 60.0

    def __post_init__(self):
        if self.result_limit_default < 1:
            raise StartupError("result_limit_default must be >= 1")

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        """Parse a key=value config file (quoted values allowed, # comments)."""
        values: dict[str, object] = {}
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise StartupError(f"cannot read config {path}: {exc}") from exc
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise StartupError(f"config line is not key = value: {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip().strip("\"'")
            if key in ("result_limit_default",):
                values[key] = int(value)
            elif key in ("feedback_fold_interval",):
                values[key] = float(value)
            elif key == "cors_allowed_origins":
                values[key] = tuple(v.strip() for v in value.split(",") if v.strip())
            else:
                values[key] = value
        try:
            return cls(**values)  # type: ignore[arg-type]
        except TypeError as exc:
            raise StartupError(f"bad config key in {path}: {exc}") from exc


class SearchRequest(BaseModel):
    skills: list[str] = Field(default_factory=list)
    technologies: list[str] = Field(default_factory=list)
    industries: list[str] = Field(default_factory=list)
    micro_industries: list[str] = Field(default_factory=list)
    revenue_kusd_range: tuple[int | None, int | None] | None = None
    employees_range: tuple[int | None, int | None] | None = None
    departments: list[str] = Field(default_factory=list)
    management_levels: list[str] = Field(default_factory=list)
    degree_keywords: list[str] = Field(default_factory=list)
    free_keywords: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_ranges_and_population(self):
        for name in ("revenue_kusd_range", "employees_range"):
            rng = getattr(self, name)
            if rng is not None:
                lo, hi = rng
                if lo is not None and hi is not None and lo > hi:
                    raise ValueError(f"{name}: min {lo} > max {hi}")
        if not any(
            getattr(self, f)
            for f in (
                "skills", "technologies", "industries", "micro_industries",
                "departments", "management_levels", "degree_keywords",
                "free_keywords",
            )
        ) and self.revenue_kusd_range is None and self.employees_range is None:
            raise ValueError("query must populate at least one field")
        return self

    def to_query(self) -> Query:
        return Query.from_json(self.model_dump())


class FeedbackEvent(BaseModel):
    posting_id: str


def create_app(config: ServiceConfig) -> FastAPI:
    """Load all artifacts and wire the endpoints; raises StartupError."""
    try:
        index = load_index(config.index_path)
        companies = CompanyStore.from_file(config.attribute_store_path)
        aliases = AliasTable.from_file(config.alias_table_path)
    except SkillgrepError as exc:
        raise StartupError(f"service startup failed: {exc}") from exc
    feedback = FeedbackStore(config.feedback_log_path)

    @contextlib.asynccontextmanager
    async def lifespan(app: FastAPI):
        task = asyncio.create_task(_fold_loop(feedback, config.feedback_fold_interval))
        try:
            yield
        finally:
            task.cancel()
            with contextlib.suppress(asyncio.CancelledError):
                await task

    app = FastAPI(title="skillgrep", lifespan=lifespan)
    app.state.index = index
    app.state.companies = companies
    app.state.aliases = aliases
    app.state.feedback = feedback
    app.state.config = config

    if config.cors_allowed_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_allowed_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": "validation_error", "message": str(exc.errors())},
        )

    @app.exception_handler(SkillgrepError)
    async def domain_handler(request: Request, exc: SkillgrepError):
        status = 400
        if isinstance(exc, (UnknownPosting,)):
            status = 404
        codes = {
            UnknownSkill: "unknown_skill",
            UnknownIndustry: "unknown_industry",
            UnknownPosting: "unknown_posting",
        }
        return JSONResponse(
            status_code=status,
            content={"code": codes.get(type(exc), "error"), "message": str(exc)},
        )

    @app.get("/healthz")
    async def healthz():
        return {
            "n_docs": index.stats.n_docs,
            "n_lemmas": len(index.stats.df),
            "format_version": FORMAT_VERSION,
        }

    @app.post("/search")
    async def search(req: SearchRequest, offset: int = 0, limit: int | None = None):
        if limit is None:
            limit = config.result_limit_default
        return search_payload(
            req.to_query(),
            index,
            companies,
            feedback,
            offset=offset,
            limit=limit,
            group_limit=limit,
        )

    @app.get("/skills")
    async def skills(prefix: str = "", limit: int = 10):
        limit = min(limit, 10)
        wanted = prefix.lower()
        hits = [
            (lemma, df)
            for lemma, df in index.stats.df.items()
            if lemma.startswith(wanted)
        ]
        hits.sort(key=lambda kv: (-kv[1], kv[0]))
        return [lemma for lemma, _ in hits[:limit]]

    @app.get("/analytics/top-skills")
    async def analytics_top_skills(k: int = 40, industry: str | None = None):
        ranked = analytics.top_skills(index, k=k, companies=companies, industry=industry)
        return ranked.to_json()

    @app.get("/analytics/top-technologies")
    async def analytics_top_technologies(k: int = 40):
        return analytics.top_technologies(index, companies, k=k).to_json()

    @app.get("/analytics/companies-by-technology")
    async def analytics_companies_by_technology(tech: str, k: int = 40):
        wanted = [t.strip() for t in tech.split(",") if t.strip()]
        return analytics.companies_by_technology(companies, wanted, k=k).to_json()

    @app.get("/analytics/top-recruiters")
    async def analytics_top_recruiters(skill: str, degree: str, k: int = 40):
        return analytics.top_recruiters(index, skill, degree, k=k).to_json()

    @app.get("/companies/{domain}/contacts")
    async def company_contacts(domain: str):
        if companies.get(domain) is None:
            return JSONResponse(
                status_code=404,
                content={"code": "unknown_company", "message": f"no record for {domain}"},
            )
        contacts = find_contacts([domain], companies)[domain]
        return {
            "domain": domain,
            "contacts": [
                {
                    "name": c.name,
                    "title_raw": c.title_raw,
                    "level": c.level,
                    "departments": sorted(c.departments),
                }
                for c in contacts
            ],
        }

    @app.post("/feedback", status_code=202)
    async def record_feedback(event: FeedbackEvent):
        if event.posting_id not in index.docs:
            raise UnknownPosting(f"posting {event.posting_id!r} not in index")
        feedback.append(event.posting_id)
        return {"status": "accepted"}

    return app


async def _fold_loop(feedback: FeedbackStore, interval: float) -> None:
    while True:
        await asyncio.sleep(interval)
        await asyncio.to_thread(feedback.fold)


def run(config: ServiceConfig) -> None:
    import uvicorn

    host, _, port = config.listen_address.partition(":")
    uvicorn.run(create_app(config), host=host or "127.0.0.1", port=int(port or 8080))
