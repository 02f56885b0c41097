"""HTTP facade over the search engine."""

from __future__ import annotations

from pathlib import Path

from fastapi import Body, FastAPI, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .clicklog import ClickLogError
from .engine import DEFAULT_K, MODES, SearchEngine
from .profiles import GENDERS, ProfileError, UserProfile
from .search import EmptyQueryError


def create_app(engine: SearchEngine, static_dir: str | Path | None = None) -> FastAPI:
    """Wire the engine into the documented endpoints.

    /search never mutates state and repeated calls return byte-identical
    bodies; /click is durable before its 204 and visible to the next search.
    """
    app = FastAPI(title="conceptsearch", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.get("/search")
    def search(
        q: str = Query(default=""),
        user: str | None = Query(default=None),
        mode: str = Query(default="comprehensive"),
        k: int = Query(default=DEFAULT_K, ge=1),
    ) -> JSONResponse:
        if mode not in MODES:
            return JSONResponse({"detail": f"unknown mode {mode!r}"}, status_code=404)
        try:
            results = engine.run(q, user_id=user, mode=mode, k=k)
        except EmptyQueryError:
            return JSONResponse({"detail": "empty query"}, status_code=400)
        payload = {
            "query": q,
            "mode": mode,
            "results": [
                {
                    "id": r.doc_id,
                    "rank": r.rank,
                    "snippet": r.snippet,
                    "base_score": r.base_score,
                    "new_score": r.new_score,
                    "categories": list(r.categories),
                    "matched_concept": r.matched_concept,
                    "clicked": r.clicked,
                    "hot": r.hot,
                }
                for r in results
            ],
        }
        return JSONResponse(payload)

    @app.post("/click")
    def click(body: dict = Body(...)) -> Response:
        user_id = body.get("user_id")
        doc_id = body.get("doc_id")
        if not isinstance(user_id, str) or not user_id or not isinstance(doc_id, str):
            return JSONResponse({"detail": "user_id and doc_id required"}, status_code=400)
        if not engine.index.has_doc(doc_id):
            return JSONResponse({"detail": f"unknown document {doc_id!r}"}, status_code=404)
        try:
            engine.record_click(user_id, doc_id)
        except ClickLogError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=500)
        return Response(status_code=204)

    @app.put("/profile/{user_id}")
    def put_profile(user_id: str, body: dict = Body(...)) -> JSONResponse:
        hobbies = body.get("hobbies", [])
        gender = body.get("gender", "unspecified")
        if gender not in GENDERS:
            return JSONResponse(
                {"detail": f"gender must be one of {list(GENDERS)}"}, status_code=400
            )
        try:
            profile = UserProfile(
                user_id=user_id,
                occupation=body.get("occupation", "") or "",
                hobbies=list(hobbies) if isinstance(hobbies, list) else [],
                gender=gender,
            )
            engine.put_profile(profile)
        except ProfileError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=400)
        return JSONResponse(profile.to_dict())

    @app.get("/profile/{user_id}")
    def get_profile(user_id: str) -> JSONResponse:
        profile = engine.profiles.get(user_id)
        if profile is None:
            return JSONResponse({"detail": f"no profile for {user_id!r}"}, status_code=404)
        return JSONResponse(profile.to_dict())

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
