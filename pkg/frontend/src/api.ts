/** Typed client for the corpws JSON service. */

export type TagRow = {
  index: number;
  token: string;
  position: string;
  lemma: string;
  basic: string;
  rich: string;
  mutation: string;
  sem: string;
};

export type ClozeDisplayItem = { word: string } | { gap: number };

export type ClozeTask = {
  task_id: string;
  doc_id: string;
  display: ClozeDisplayItem[];
  bank: string[];
  gap_count: number;
  params: Record<string, unknown>;
};

export type CheckResult = {
  task_id: string;
  results: boolean[];
  correct: number;
  total: number;
};

export type TaskLine = {
  doc_id: string;
  sentence: number;
  tokens: string[];
};

export type IdentifyTask = {
  task_id: string;
  band: string;
  word_type: string;
  lines: TaskLine[];
  params: Record<string, unknown>;
};

export type WordTask = {
  task_id: string;
  word: string;
  pos: string | null;
  lines: TaskLine[];
  reveal: string;
  params: Record<string, unknown>;
};

export type ProfileEntry = { word: string; band: string; highlight: boolean };

export type Profile = {
  entries: ProfileEntry[];
  counts: Record<string, number>;
  percentages: Record<string, number>;
  total_words: number;
};

export type CorpusStats = {
  documents: number;
  tokens: number;
  words: number;
  language_types: Record<string, number>;
  genres: Record<string, number>;
};

/** Service-side failure, already unpacked from the {error, message} body. */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

async function unwrap<T>(res: Response): Promise<T> {
  if (res.ok) {
    return (await res.json()) as T;
  }
  let code = "http_error";
  let message = `request failed with status ${res.status}`;
  try {
    const body = (await res.json()) as { error?: string; message?: string };
    if (body.error) code = body.error;
    if (body.message) message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(code, message, res.status);
}

export class Api {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    let res: Response;
    try {
      res = await fetch(this.base + path);
    } catch {
      throw new ApiError("network", "service unreachable", 0);
    }
    return unwrap<T>(res);
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    let res: Response;
    try {
      res = await fetch(this.base + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch {
      throw new ApiError("network", "service unreachable", 0);
    }
    return unwrap<T>(res);
  }

  stats(): Promise<CorpusStats> {
    return this.get("/api/corpus/stats");
  }

  tag(text: string): Promise<{ rows: TagRow[] }> {
    return this.get(`/api/tag?text=${encodeURIComponent(text)}`);
  }

  clozeCreate(params: {
    genre: string | null;
    gap_frequency: number;
    text_length: number;
    seed: number;
  }): Promise<ClozeTask> {
    return this.post("/api/tiwtiadur/cloze", params);
  }

  clozeCheck(taskId: string, fills: string[]): Promise<CheckResult> {
    return this.post("/api/tiwtiadur/cloze/check", {
      task_id: taskId,
      fills,
    });
  }

  identify(params: {
    band: string;
    word_type: string;
    max_sentences: number;
    seed: number;
  }): Promise<IdentifyTask> {
    return this.post("/api/tiwtiadur/identify", params);
  }

  wordTask(params: {
    word: string;
    pos: string | null;
    max_lines: number;
    seed: number;
  }): Promise<WordTask> {
    return this.post("/api/tiwtiadur/wordtask", params);
  }

  profile(text: string, highlightNonLevel: boolean): Promise<Profile> {
    return this.post("/api/tiwtiadur/profile", {
      text,
      highlight_non_level: highlightNonLevel,
    });
  }
}
