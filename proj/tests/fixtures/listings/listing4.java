class PagingControllerLambda {
  DataView view;
  int pageSize;

  private void registerInteractiveObjectHandlers() {
    view.resetPageButton().addActionListener(
                 e -> requestData(pageSize, null));

    view.previousPageButton().addActionListener(e -> {
      if (hasPreviousBookmark())
        requestData(pageSize, getPreviousBookmark());
    });
  }
}
