from multiprocessing import Process, Queue
from queue import Empty
from typing import Any, Dict, List, Sequence, Union

from configs.constants import WORKER_POLL_SECONDS
from errors import ArgumentError, ConfigurationError, DimensionError, NumericError, UnknownNameError, WorkerError
from helpers.get_config_by_path import parse_config
from interfaces.layer import LayerInterface
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.tensor import Tensor
from models.toy_job import ToyJobModel
from models.toy_task import ToyTask
from models.train_report import TrainReport
from services.logging import LoggingService
from services.model_builder import ModelBuilderService
from services.toy.helpers.gen_task import gen_task
from services.toy.helpers.perturb_independence import perturb_independence
from services.trainer import TrainerService


_ERRORS = {
    error.__name__: error
    for error in (ArgumentError, ConfigurationError, DimensionError, NumericError, UnknownNameError)
}


class ToyService:
    """
    Long-range toy task: dataset generation, training runs and perturbation checks.

    Independent runs can be executed in worker processes; results are collected
    through a queue and returned in job order.
    """

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _builder: ModelBuilderService
    _log: LoggingService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def __init__(self) -> None:
        self._builder = ModelBuilderService()

        self._log = LoggingService()
        self._log.setup("toy_service")

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def gen_task(self, seed: int, length: int, distance: int, count: int) -> ToyTask:
        return gen_task(seed, length, distance, count)

    def perturb_independence(
        self,
        model: LayerInterface,
        input: Tensor,  # noqa: A002
        position: int,
        region: Sequence[int],
        seed: int = 0,
    ) -> bool:
        return perturb_independence(model, input, position, region, seed=seed)

    def run(self, job: ToyJobModel) -> TrainReport:
        """
        Generate the task, build the toy model and train it.

        Raises:
            ConfigurationError: If the job config is not a D2 or D3 block.
        """
        config = self._block_config(job.config)
        task = gen_task(job.seed, job.length, job.distance, job.count)
        model = self._builder.build_toy_model(config, seed=job.seed)
        trainer = TrainerService(job.optimizer)
        return trainer.train(model, task, seed=job.seed, run_id=job.run_id, config=self._describe(job))

    def run_parallel(self, jobs: List[ToyJobModel]) -> List[TrainReport]:
        """
        Run every job in its own process.

        Raises:
            ArgumentError: If two jobs share a run id.
            D3KitError: Re-raised from the first failing job, in job order.
            WorkerError: If a worker exits without reporting a result.
        """
        run_ids = [job.run_id for job in jobs]
        duplicates = sorted({run_id for run_id in run_ids if run_ids.count(run_id) > 1})

        if duplicates:
            raise ArgumentError(f"Run ids must be unique, repeated: {', '.join(duplicates)}")

        if len(jobs) <= 1:
            return [self.run(job) for job in jobs]

        results: Queue = Queue()
        processes = {
            job.run_id: Process(target=_run_job, kwargs={"job": job.model_dump(mode="json"), "results": results})
            for job in jobs
        }

        for process in processes.values():
            process.start()

        try:
            collected = self._collect(processes, results)
        finally:
            for process in processes.values():
                if process.is_alive():
                    process.terminate()

                process.join()

        reports = []

        for job in jobs:
            payload = collected[job.run_id]

            if "error" in payload:
                self._log.error(f"[{job.run_id}] {payload['error']}")
                raise _ERRORS.get(payload["kind"], WorkerError)(f"Run {job.run_id} failed: {payload['error']}")

            reports.append(TrainReport.model_validate(payload["report"]))

        return reports

    # ───────────────────────────────────────────────────────────
    # PRIVATE METHODS
    # ───────────────────────────────────────────────────────────
    def _collect(self, processes: Dict[str, Process], results: Queue) -> Dict[str, Dict[str, Any]]:
        collected: Dict[str, Dict[str, Any]] = {}

        while len(collected) < len(processes):
            try:
                payload = results.get(timeout=WORKER_POLL_SECONDS)
                collected[payload["run_id"]] = payload
                continue
            except Empty:
                pass

            silent = [
                run_id for run_id, process in processes.items() if run_id not in collected and not process.is_alive()
            ]

            if not silent:
                continue

            # The last put can land after the worker has exited.
            while True:
                try:
                    payload = results.get_nowait()
                except Empty:
                    break

                collected[payload["run_id"]] = payload

            lost = [run_id for run_id in silent if run_id not in collected]

            if lost:
                codes = ", ".join(f"{run_id} (exit {processes[run_id].exitcode})" for run_id in lost)
                raise WorkerError(f"Workers exited without a report: {codes}")

        return collected

    def _block_config(self, payload: Dict[str, Any]) -> Union[D2Config, D3Config]:
        config = parse_config(payload)

        if not isinstance(config, (D2Config, D3Config)):
            raise ConfigurationError("The toy task trains a single D2 or D3 block, not a backbone")

        return config

    def _describe(self, job: ToyJobModel) -> Dict[str, Any]:
        return {
            "model": job.config,
            "distance": job.distance,
            "length": job.length,
            "count": job.count,
            "optimizer": job.optimizer.model_dump(mode="json"),
        }


def _run_job(job: Dict[str, Any], results: Queue) -> None:
    model = ToyJobModel.model_validate(job)

    try:
        report = ToyService().run(model)
        results.put({"run_id": model.run_id, "report": report.model_dump(mode="json")})
    except Exception as exc:
        results.put({"run_id": model.run_id, "error": str(exc), "kind": type(exc).__name__})
