from typing import Literal, Optional

from fastapi import APIRouter, HTTPException, Path, Query

from quasisection_euler.core.rational import format_rational
from quasisection_euler.engine.weights import weight_ff, weight_fs, weight_p
from quasisection_euler.models.portrait import Side

router = APIRouter(prefix="/weights", tags=["weights"])


@router.get("/{kind}")
async def get_weight(
    kind: Literal["ff", "p", "fs"] = Path(..., description="ff: тип I, p: тип II, fs: тип III"),
    n: Optional[int] = Query(None, ge=0),
    k: Optional[int] = Query(None, ge=0),
    r: Optional[int] = Query(None, ge=0),
    side: Side = Query(Side.R),
):
    """
    Возвращает точный вес вершины в виде строки "p/q".
    """
    try:
        if kind == "ff":
            if n is None or k is None:
                raise ValueError("weight ff requires n and k")
            value = weight_ff(n, k)
        else:
            if r is None:
                raise ValueError(f"weight {kind} requires r")
            value = weight_p(r, side) if kind == "p" else weight_fs(r, side)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {"kind": kind, "weight": format_rational(value)}
