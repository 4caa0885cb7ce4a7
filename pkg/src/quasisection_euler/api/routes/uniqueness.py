from typing import List, Optional

from fastapi import APIRouter, HTTPException, Query

from quasisection_euler.engine.formula import ANCHORS, FAMILIES, solve_uniqueness
from quasisection_euler.schemas.summary import UniquenessRead

router = APIRouter(prefix="/uniqueness", tags=["uniqueness"])


@router.get("/", response_model=UniquenessRead)
async def uniqueness(
    cutoff: Optional[int] = Query(None, description="Максимум n+k и r"),
    families: List[str] = Query(list(FAMILIES)),
    anchors: List[str] = Query(list(ANCHORS), description="none: без якорей"),
):
    """
    Решает систему ограничений на веса и сравнивает решение с формулами.
    """
    anchors = [a for a in anchors if a and a.lower() != "none"]
    try:
        report = solve_uniqueness(cutoff, families, anchors)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return UniquenessRead(
        cutoff=report.cutoff,
        families=report.families,
        anchors=report.anchors,
        equations=len(report.equations),
        rank=report.rank,
        kernel_dim=report.kernel_dim,
        unique=report.unique,
        solution={str(d): v for d, v in report.solution.items()} if report.solution else None,
        determined=[str(d) for d in report.determined],
        mismatches=[f"{d}: {got} != {want}" for d, got, want in report.mismatches],
        corrections=report.corrections,
    )
