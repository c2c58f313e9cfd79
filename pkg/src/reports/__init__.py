from src.reports.writer import SCHEMA_VERSION, ReportWriter, render, render_csv, render_json, render_table

__all__ = ["SCHEMA_VERSION", "ReportWriter", "render", "render_csv", "render_json", "render_table"]
