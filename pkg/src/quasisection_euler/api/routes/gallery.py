from typing import List

from fastapi import APIRouter, HTTPException, Path, Request

from quasisection_euler.engine.formula import GALLERY, euler_of_summary, gallery
from quasisection_euler.exceptions import UnknownGalleryEntry
from quasisection_euler.schemas.summary import SummaryEulerRead, SummaryModel

router = APIRouter(prefix="/gallery", tags=["gallery"])


@router.get("/", response_model=List[str])
async def list_gallery():
    return sorted(GALLERY)


@router.get("/{name}", response_model=SummaryEulerRead)
async def get_gallery_entry(request: Request, name: str = Path(..., description="Имя примера")):
    """
    Возвращает пример галереи; целые параметры передаются query-строкой (?N=3).
    """
    try:
        params = {key: int(value) for key, value in request.query_params.items()}
        summary = gallery(name, **params)
    except UnknownGalleryEntry as e:
        raise HTTPException(status_code=404, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    euler = euler_of_summary(summary)
    return SummaryEulerRead(
        summary=SummaryModel.from_domain(summary),
        euler=euler,
        match=euler == summary.declared_euler,
        notes=list(summary.notes),
    )
