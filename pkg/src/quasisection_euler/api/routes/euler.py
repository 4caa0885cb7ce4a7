from fastapi import APIRouter, HTTPException

from quasisection_euler.engine.arrangement import build_dcel, euler_local_formula, vertex_table
from quasisection_euler.engine.formula import euler_of_summary
from quasisection_euler.schemas.arrangement import ArrangementEulerRead, ArrangementModel, VertexRead
from quasisection_euler.schemas.common import DescriptorModel
from quasisection_euler.schemas.summary import SummaryEulerRead, SummaryModel

router = APIRouter(prefix="/euler", tags=["euler"])


@router.post("/summary", response_model=SummaryEulerRead)
async def euler_summary(summary_in: SummaryModel):
    """
    Сумма весов по мультимножеству вершин.
    """
    try:
        summary = summary_in.to_domain()
        euler = euler_of_summary(summary)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return SummaryEulerRead(summary=summary_in, euler=euler, match=euler == summary.declared_euler)


@router.post("/arrangement", response_model=ArrangementEulerRead)
async def euler_arrangement(arrangement_in: ArrangementModel):
    """
    Строит разбиение, классифицирует вершины и возвращает локальную формулу
    вместе с таблицей вершин.
    """
    try:
        spec = arrangement_in.to_domain()
        dcel = build_dcel(spec)
        rows = vertex_table(spec, dcel)
        euler = euler_local_formula(spec, dcel)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    v, e, f = dcel.counts()
    return ArrangementEulerRead(
        euler=euler,
        counts={"V": v, "E": e, "F": f, "C": dcel.components},
        vertices=[
            VertexRead(
                vertex=row.vertex,
                x=row.point[0],
                y=row.point[1],
                circles=row.circles,
                descriptor=DescriptorModel.from_descriptor(row.descriptor),
                weight=row.weight,
            )
            for row in rows
        ],
    )
